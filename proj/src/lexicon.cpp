#include "ctxsugg/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ctxsugg/error.hpp"
#include "ctxsugg/text.hpp"

namespace ctxsugg {

void Lexicon::add_synonym(const std::string& term, const std::string& synonym, double weight) {
    synonyms_[term].emplace_back(synonym, weight);
    synonyms_[synonym].emplace_back(term, weight);
}

void Lexicon::add_stopword(const std::string& word) {
    stopwords_.insert(word);
}

void Lexicon::set_word_class(const std::string& word, WordClass cls) {
    word_classes_[word] = cls;
}

bool Lexicon::is_stopword(const std::string& word) const {
    return stopwords_.count(word) > 0;
}

WordClass Lexicon::word_class(const std::string& word) const {
    auto it = word_classes_.find(word);
    return it == word_classes_.end() ? WordClass::Noun : it->second;
}

double Lexicon::word_similarity(const std::string& a, const std::string& b) const {
    if (a == b) return 1.0;
    double best = 0.0;
    if (auto it = synonyms_.find(a); it != synonyms_.end()) {
        for (const auto& [syn, weight] : it->second) {
            if (syn == b) best = std::max(best, weight);
        }
    }
    return best;
}

Description filter_description(const Description& description, const Lexicon& lexicon) {
    Description out;
    out.tokens.reserve(description.tokens.size());
    for (const auto& token : description.tokens) {
        if (lexicon.is_stopword(token)) continue;
        if (lexicon.has_word_classes() && lexicon.word_class(token) == WordClass::Other) continue;
        out.tokens.push_back(token);
    }
    return out;
}

Description preprocess_description(const std::string& text, const Lexicon& lexicon) {
    return filter_description(make_description(text), lexicon);
}

namespace {

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string normalize_term(const std::string& term) {
    std::string out;
    out.reserve(term.size());
    for (unsigned char c : term) {
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    auto first = out.find_first_not_of(" \t");
    auto last = out.find_last_not_of(" \t");
    if (first == std::string::npos) return "";
    return out.substr(first, last - first + 1);
}

}  // namespace

void parse_synonyms(std::istream& in, Lexicon& lexicon) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (skippable(line)) continue;
        auto fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3) {
            raise(ErrorCode::Parse, "lexicon line " + std::to_string(line_no) +
                                        ": expected <term>\\t<synonym>[\\t<weight>]");
        }
        std::string term = normalize_term(fields[0]);
        std::string synonym = normalize_term(fields[1]);
        if (term.empty() || synonym.empty()) {
            raise(ErrorCode::Parse, "lexicon line " + std::to_string(line_no) + ": empty term");
        }
        double weight = kDefaultSynonymWeight;
        if (fields.size() == 3) {
            try {
                std::size_t pos = 0;
                weight = std::stod(fields[2], &pos);
                if (pos != fields[2].size()) throw std::invalid_argument(fields[2]);
            } catch (const std::exception&) {
                raise(ErrorCode::Parse, "lexicon line " + std::to_string(line_no) + ": weight \"" +
                                            fields[2] + "\" is not a number");
            }
            if (weight < 0.0 || weight > 1.0) {
                raise(ErrorCode::Domain, "lexicon line " + std::to_string(line_no) + ": weight " +
                                             fields[2] + " outside [0,1]");
            }
        }
        lexicon.add_synonym(term, synonym, weight);
    }
}

void parse_stopwords(std::istream& in, Lexicon& lexicon) {
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (skippable(line)) continue;
        std::string word = normalize_term(line);
        if (!word.empty()) lexicon.add_stopword(word);
    }
}

void parse_word_classes(std::istream& in, Lexicon& lexicon) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (skippable(line)) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 2) {
            raise(ErrorCode::Parse,
                  "word-class line " + std::to_string(line_no) + ": expected <word>\\t<class>");
        }
        std::string word = normalize_term(fields[0]);
        WordClass cls;
        if (fields[1] == "N") {
            cls = WordClass::Noun;
        } else if (fields[1] == "ADJ") {
            cls = WordClass::Adjective;
        } else if (fields[1] == "PREP") {
            cls = WordClass::Preposition;
        } else if (fields[1] == "O") {
            cls = WordClass::Other;
        } else {
            raise(ErrorCode::Parse, "word-class line " + std::to_string(line_no) +
                                        ": unknown class \"" + fields[1] +
                                        "\" (expected N, ADJ, PREP or O)");
        }
        lexicon.set_word_class(word, cls);
    }
}

Lexicon load_lexicon(const std::string& synonyms_path, const std::string& stopwords_path,
                     const std::string& word_classes_path) {
    Lexicon lexicon;
    auto open = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) raise(ErrorCode::Io, "cannot open \"" + path + "\" for reading");
        return in;
    };
    if (!synonyms_path.empty()) {
        auto in = open(synonyms_path);
        parse_synonyms(in, lexicon);
    }
    if (!stopwords_path.empty()) {
        auto in = open(stopwords_path);
        parse_stopwords(in, lexicon);
    }
    if (!word_classes_path.empty()) {
        auto in = open(word_classes_path);
        parse_word_classes(in, lexicon);
    }
    return lexicon;
}

}  // namespace ctxsugg
