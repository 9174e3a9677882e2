#pragma once

#include <string>
#include <vector>

namespace ctxsugg {

// Rating domain used throughout: -1 means "no rating given".
inline constexpr int kMinRating = -1;
inline constexpr int kMaxRating = 4;
inline constexpr int kUnrated = -1;

bool rating_in_domain(int rating) noexcept;

enum class TagKind { Generic, Specific };

/// A tag from the predefined vocabulary. `text` is always normalized
/// (lowercase, trimmed, single internal spaces).
struct Tag {
    std::string text;
    TagKind kind = TagKind::Generic;

    friend bool operator==(const Tag& a, const Tag& b) {
        return a.text == b.text && a.kind == b.kind;
    }
};

/// Tokenized attraction description. May be empty.
struct Description {
    std::vector<std::string> tokens;

    bool empty() const noexcept { return tokens.empty(); }
    std::size_t size() const noexcept { return tokens.size(); }

    friend bool operator==(const Description& a, const Description& b) {
        return a.tokens == b.tokens;
    }
};

enum class TagSource { UserProvided, Enriched };

/// A tag set kept sorted and unique by normalized text.
using TagSet = std::vector<Tag>;

// Inserts preserving sorted order; an existing entry with the same text wins.
void add_tag(TagSet& tags, Tag tag);
bool contains_tag(const TagSet& tags, const std::string& text);
TagSet intersect_tags(const TagSet& a, const TagSet& b);

struct ProfileAttraction {
    std::string id;
    Description description;
    int rating = kUnrated;
    TagSet tags;
    TagSource tags_source = TagSource::UserProvided;

    friend bool operator==(const ProfileAttraction&, const ProfileAttraction&) = default;
};

struct UserProfile {
    std::string user_id;
    std::vector<ProfileAttraction> attractions;

    friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

struct Candidate {
    std::string id;
    Description description;
    TagSet tags;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// One ranking task: a user and the pool of unrated suggestions for them.
struct Request {
    std::string request_id;
    std::string user_id;
    std::vector<Candidate> candidates;

    friend bool operator==(const Request&, const Request&) = default;
};

struct QrelEntry {
    std::string request_id;
    std::string candidate_id;
    int rating = kUnrated;

    friend bool operator==(const QrelEntry&, const QrelEntry&) = default;
};

}  // namespace ctxsugg
