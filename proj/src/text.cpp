#include "ctxsugg/text.hpp"

#include <cctype>

#include "ctxsugg/error.hpp"

namespace ctxsugg {

namespace {

bool is_word_byte(unsigned char c) {
    // Bytes >= 0x80 are UTF-8 continuation/lead bytes; treat them as word
    // content so non-ASCII text passes through unmangled.
    return std::isalnum(c) || c == '&' || c == '-' || c >= 0x80;
}

bool has_alnum(const std::string& token) {
    for (unsigned char c : token) {
        if (std::isalnum(c) || c >= 0x80) return true;
    }
    return false;
}

}  // namespace

std::string normalize_tag(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char c : raw) {
        if (std::isupper(c)) c = static_cast<unsigned char>(std::tolower(c));
        if (std::isspace(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (!is_word_byte(c)) continue;  // drop punctuation outright
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(c));
    }
    if (out.empty()) {
        raise(ErrorCode::NormalizationEmpty, "tag is empty after normalization: \"" + raw + "\"");
    }
    return out;
}

std::vector<std::string> tokenize_words(const std::string& raw) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty() && has_alnum(current)) tokens.push_back(current);
        current.clear();
    };
    for (unsigned char c : raw) {
        if (std::isupper(c)) c = static_cast<unsigned char>(std::tolower(c));
        if (is_word_byte(c)) {
            current.push_back(static_cast<char>(c));
        } else if (c == '\'') {
            // contractions: "don't" -> "dont"
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

}  // namespace ctxsugg
