#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ctxsugg/types.hpp"

namespace ctxsugg {

// Parsers for the toolkit's line-oriented input formats. All of them throw
// Error with a line number on malformed input.

/// Profiles file: one JSON record per line,
/// {"user_id": ..., "attractions": [{"id", "description", "rating", "tags"}]}.
std::vector<UserProfile> parse_profiles(std::istream& in);

/// Requests file: {"request_id", "user_id", "candidates": [{"id",
/// "description", "tags"?}]} per line.
std::vector<Request> parse_requests(std::istream& in);

/// Tagset file: "<tag>[\t<G|S>]" per line, '#' comments ignored. Tags are
/// normalized and deduplicated (first classification wins); a missing class
/// column means Generic.
std::vector<Tag> parse_tagset(std::istream& in);

/// Qrels file: "<request_id> 0 <candidate_id> <rating>".
std::vector<QrelEntry> parse_qrels(std::istream& in);

// Canonical serializers. parse(serialize(x)) == x, and serializing a parsed
// canonical file reproduces it byte for byte.
std::string serialize_profiles(const std::vector<UserProfile>& profiles);
std::string serialize_requests(const std::vector<Request>& requests);
std::string serialize_tagset(const std::vector<Tag>& tags);
std::string serialize_qrels(const std::vector<QrelEntry>& entries);

// File helpers (throw Error(Io) when the path cannot be opened).
std::vector<UserProfile> load_profiles(const std::string& path);
std::vector<Request> load_requests(const std::string& path);
std::vector<Tag> load_tagset(const std::string& path);
std::vector<QrelEntry> load_qrels(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ctxsugg
