#pragma once

#include <string>
#include <vector>

#include "ctxsugg/types.hpp"

namespace ctxsugg {

/// Normalizes a raw tag string: lowercase, trimmed, internal whitespace runs
/// collapsed to one space; characters other than alphanumerics, '&', '-' and
/// spaces are removed (bytes >= 0x80 pass through so UTF-8 text survives).
/// Throws Error(NormalizationEmpty) when nothing is left.
std::string normalize_tag(const std::string& raw);

/// Splits raw text into lowercase word tokens. Punctuation separates words
/// ('&' and '-' stay inside tokens, ASCII apostrophes are dropped) and tokens
/// without any alphanumeric content are discarded.
std::vector<std::string> tokenize_words(const std::string& raw);

inline Description make_description(const std::string& raw) {
    return Description{tokenize_words(raw)};
}

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace ctxsugg
