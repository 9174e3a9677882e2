#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ctxsugg/types.hpp"

namespace ctxsugg {

enum class WordClass { Noun, Adjective, Preposition, Other };

// Default weight for synonym lines without an explicit weight column. The
// value sits between the generic-tag threshold (0.75) and the specific-tag
// threshold (0.95), so plain synonyms qualify as generic matches only.
inline constexpr double kDefaultSynonymWeight = 0.8;

/// File-backed lexical knowledge: weighted synonym pairs (kept symmetric),
/// a stopword list and an optional word-class table.
class Lexicon {
public:
    Lexicon() = default;

    /// Registers a synonym pair; both directions are stored.
    void add_synonym(const std::string& term, const std::string& synonym, double weight);
    void add_stopword(const std::string& word);
    void set_word_class(const std::string& word, WordClass cls);

    bool is_stopword(const std::string& word) const;
    bool has_word_classes() const { return !word_classes_.empty(); }
    /// Returns the mapped class, or Noun for unknown words (unknowns are kept).
    WordClass word_class(const std::string& word) const;

    /// Highest weight linking the two words, 1.0 for equal words, 0.0 when
    /// unlinked.
    double word_similarity(const std::string& a, const std::string& b) const;

    const std::map<std::string, std::vector<std::pair<std::string, double>>>& synonyms() const {
        return synonyms_;
    }
    const std::set<std::string>& stopwords() const { return stopwords_; }

private:
    std::map<std::string, std::vector<std::pair<std::string, double>>> synonyms_;
    std::set<std::string> stopwords_;
    std::map<std::string, WordClass> word_classes_;
};

/// Word-similarity interface used by matching and ranking; configured with a
/// Lexicon. Scores are symmetric, in [0,1], and 1.0 on the diagonal.
class SimilarityProvider {
public:
    explicit SimilarityProvider(const Lexicon& lexicon) : lexicon_(&lexicon) {}

    double word_similarity(const std::string& a, const std::string& b) const {
        return lexicon_->word_similarity(a, b);
    }
    const Lexicon& lexicon() const { return *lexicon_; }

private:
    const Lexicon* lexicon_;
};

/// Lowercases, strips punctuation, tokenizes, removes stopwords; when the
/// lexicon has a word-class table, drops words of class Other and keeps
/// unknown words.
Description preprocess_description(const std::string& text, const Lexicon& lexicon);

/// Re-applies the stopword / word-class filter to an already tokenized
/// description.
Description filter_description(const Description& description, const Lexicon& lexicon);

// Parsers for the three lexicon inputs ('#' comments ignored everywhere).
// Synonym lines are "<term>\t<synonym>[\t<weight>]".
void parse_synonyms(std::istream& in, Lexicon& lexicon);
// One word per line.
void parse_stopwords(std::istream& in, Lexicon& lexicon);
// Lines "<word>\t<N|ADJ|PREP|O>".
void parse_word_classes(std::istream& in, Lexicon& lexicon);

/// Loads a lexicon from up to three files; empty paths are skipped.
Lexicon load_lexicon(const std::string& synonyms_path,
                     const std::string& stopwords_path = "",
                     const std::string& word_classes_path = "");

}  // namespace ctxsugg
