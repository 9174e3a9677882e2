#pragma once

#include <string>
#include <vector>

#include "ctxsugg/lexicon.hpp"
#include "ctxsugg/types.hpp"

namespace ctxsugg {

/// Match terms of a tag: its text tokenized with stopwords removed
/// ("shopping for shoes" -> {shopping, shoes}).
std::vector<std::string> tag_terms(const Tag& tag, const Lexicon& lexicon);

// Specific tags need a near-exact hit (similarity >= 0.95) for every term;
// generic tags accept synonyms (similarity > 0.75). Multi-word tags require
// all terms to match some description token.
bool match_specific_tag(const Description& desc, const std::vector<std::string>& terms,
                        const SimilarityProvider& provider);
bool match_generic_tag(const Description& desc, const std::vector<std::string>& terms,
                       const SimilarityProvider& provider);

inline constexpr double kSpecificTagThreshold = 0.95;
inline constexpr double kGenericTagThreshold = 0.75;

/// Assigns tagset tags to untagged attractions and candidates by matching
/// their descriptions (stopword/word-class filtered) against each tag's
/// terms. Records that already carry tags are never touched.
class Enricher {
public:
    Enricher(const std::vector<Tag>& tagset, const SimilarityProvider& provider);

    ProfileAttraction enrich_attraction(const ProfileAttraction& attraction) const;
    UserProfile enrich_profile(const UserProfile& profile) const;
    Request enrich_candidates(const Request& request) const;

    /// Tags matching a filtered description, in tagset order.
    TagSet matching_tags(const Description& filtered_desc) const;

private:
    struct PreparedTag {
        Tag tag;
        std::vector<std::string> terms;
    };
    std::vector<PreparedTag> tags_;
    const SimilarityProvider* provider_;
};

}  // namespace ctxsugg
