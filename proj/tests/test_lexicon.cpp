#include <doctest.h>

#include <random>
#include <sstream>

#include "ctxsugg/error.hpp"
#include "ctxsugg/lexicon.hpp"

using namespace ctxsugg;

namespace {

Lexicon lexicon_from(const std::string& synonyms, const std::string& stopwords = "",
                     const std::string& classes = "") {
    Lexicon lex;
    if (!synonyms.empty()) {
        std::istringstream in(synonyms);
        parse_synonyms(in, lex);
    }
    if (!stopwords.empty()) {
        std::istringstream in(stopwords);
        parse_stopwords(in, lex);
    }
    if (!classes.empty()) {
        std::istringstream in(classes);
        parse_word_classes(in, lex);
    }
    return lex;
}

}  // namespace

TEST_CASE("word_similarity identity, synonym and unlinked cases") {
    auto lex = lexicon_from("meal\tfood\t0.8\n");
    CHECK(lex.word_similarity("beach", "beach") == 1.0);
    CHECK(lex.word_similarity("meal", "food") == 0.8);
    CHECK(lex.word_similarity("food", "meal") == 0.8);
    CHECK(lex.word_similarity("beach", "opera") == 0.0);
}

TEST_CASE("synonym weight defaults to 0.8") {
    auto lex = lexicon_from("meal\tfood\n");
    CHECK(lex.word_similarity("meal", "food") == kDefaultSynonymWeight);
}

TEST_CASE("synonym weights outside [0,1] are rejected") {
    try {
        lexicon_from("meal\tfood\t1.5\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Domain);
    }
    CHECK_THROWS_AS(lexicon_from("meal\tfood\t-0.1\n"), Error);
    CHECK_THROWS_AS(lexicon_from("meal\tfood\tabc\n"), Error);
    CHECK_THROWS_AS(lexicon_from("meal\n"), Error);
}

TEST_CASE("symmetric closure holds for every stored pair") {
    auto lex = lexicon_from("meal\tfood\t0.8\nquiet\tpeace\t0.9\nmeal\tsnack\t0.5\n");
    for (const auto& [term, entries] : lex.synonyms()) {
        for (const auto& [synonym, weight] : entries) {
            CHECK(lex.word_similarity(synonym, term) >= weight);
        }
    }
}

TEST_CASE("word_similarity keeps the maximum weight among duplicates") {
    auto lex = lexicon_from("meal\tfood\t0.5\nmeal\tfood\t0.9\n");
    CHECK(lex.word_similarity("meal", "food") == 0.9);
}

TEST_CASE("word_similarity symmetry and identity on random pairs") {
    auto lex = lexicon_from("meal\tfood\t0.8\nquiet\tpeace\t0.9\nmall\tshopping\n");
    std::vector<std::string> words;
    for (const auto& [term, _] : lex.synonyms()) words.push_back(term);
    words.push_back("unrelated");
    words.push_back("other");
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 10000; ++i) {
        const auto& a = words[pick(rng)];
        const auto& b = words[pick(rng)];
        double ab = lex.word_similarity(a, b);
        CHECK(ab == lex.word_similarity(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(lex.word_similarity(a, a) == 1.0);
    }
}

TEST_CASE("preprocess_description removes stopwords") {
    auto lex = lexicon_from("", "the\nwas\n");
    auto desc = preprocess_description("The beach was great!!!", lex);
    CHECK(desc.tokens == std::vector<std::string>{"beach", "great"});
}

TEST_CASE("preprocess_description of empty text is empty") {
    Lexicon lex;
    CHECK(preprocess_description("", lex).tokens.empty());
}

TEST_CASE("word-class filter drops Other and keeps unknown words") {
    auto lex = lexicon_from("", "", "peaceful\tADJ\nbeach\tN\nwalk\tN\nstrolled\tO\nnear\tPREP\n");
    auto desc = preprocess_description("Peaceful beach walk", lex);
    CHECK(desc.tokens == std::vector<std::string>{"peaceful", "beach", "walk"});
    auto filtered = preprocess_description("strolled near unknown beach", lex);
    CHECK(filtered.tokens == std::vector<std::string>{"near", "unknown", "beach"});
}

TEST_CASE("word-class parser rejects unknown classes") {
    CHECK_THROWS_AS(lexicon_from("", "", "walk\tVERB\n"), Error);
}

TEST_CASE("preprocess never emits stopwords or Other-class words") {
    auto lex = lexicon_from("", "the\nand\nof\n", "ran\tO\njumped\tO\n");
    std::mt19937 rng(7);
    std::vector<std::string> vocab = {"the", "and", "of",   "ran",  "jumped",
                                      "sea", "fort", "lane", "tree", "gate"};
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::uniform_int_distribution<int> len(0, 12);
    for (int i = 0; i < 500; ++i) {
        std::string text;
        int n = len(rng);
        for (int j = 0; j < n; ++j) {
            if (j) text.push_back(' ');
            text += vocab[pick(rng)];
        }
        for (const auto& token : preprocess_description(text, lex).tokens) {
            CHECK(!lex.is_stopword(token));
            CHECK(lex.word_class(token) != WordClass::Other);
        }
    }
}
