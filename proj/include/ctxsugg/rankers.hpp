#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctxsugg/lexicon.hpp"
#include "ctxsugg/types.hpp"

namespace ctxsugg {

enum class Algo { DRec, CovRec, CmpRec, RRec };

const char* algo_name(Algo algo) noexcept;
/// Accepts "drec", "cov-rec", "cmp-rec", "r-rec"; throws Error(InvalidArgument)
/// otherwise.
Algo algo_from_name(const std::string& name);

/// One ranked candidate. What primary/secondary mean depends on the ranker:
/// D-Rec: tag-phrase score / description score; Cov-Rec: coverage /
/// completeness; Cmp-Rec: completeness / coverage; R-Rec: best per-attraction
/// match score, with inherited_rating as the leading sort key (-1 sentinel
/// for the other rankers and for unmatched candidates).
struct ScoredCandidate {
    std::string candidate_id;
    double primary_score = 0.0;
    double secondary_score = 0.0;
    int inherited_rating = kUnrated;

    friend bool operator==(const ScoredCandidate&, const ScoredCandidate&) = default;
};

struct RankedList {
    std::string request_id;
    std::vector<ScoredCandidate> entries;

    friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// Mean pairwise word similarity between two descriptions:
/// sum of word_similarity over all cross pairs divided by |d_u|*|d_c|;
/// 0 when either side is empty.
double desc_pair_score(const Description& d_u, const Description& d_c,
                       const SimilarityProvider& provider);

/// Same formula with the attraction's tags strung into one phrase (tags in
/// ascending text order, each tag's words in place) as the first operand.
double tag_phrase_score(const TagSet& tags_u, const Description& d_c,
                        const SimilarityProvider& provider);

std::vector<std::string> tag_phrase(const TagSet& tags);

/// Non-redundant union of all attraction tag sets.
TagSet profile_tag_union(const UserProfile& profile);

/// |tau ∩ t_c| / |tau|; 0 for an empty tau.
double coverage(const TagSet& tau, const TagSet& t_c);

/// sum_i |t_u_i ∩ t_c| / sum_i |t_u_i| over the profile's attractions; 0 when
/// the profile carries no tags.
double completeness(const UserProfile& profile, const TagSet& t_c);

/// Per-rating tag statistics for R-Rec. For every rating r present with at
/// least one tag occurrence, scores(r, t) = counts(r, t) / totals(r) and the
/// scores for r sum to one.
struct RatingIndex {
    std::map<int, int> totals;                                  // rating -> total tag occurrences
    std::map<int, std::map<std::string, int>> counts;           // rating -> tag -> #attractions
    std::map<int, std::map<std::string, double>> scores;        // rating -> tag -> normalized score

    double score(int rating, const std::string& tag) const;
};

RatingIndex build_rating_index(const UserProfile& profile);

/// Sum of normalized scores of the tags shared by the candidate and the
/// attraction, taken at the attraction's rating.
double candidate_match_score(const Candidate& candidate, const ProfileAttraction& attraction,
                             const RatingIndex& index);

// The three rankers. Output order is total and deterministic; the final tie
// break is always ascending candidate id.
RankedList rank_drec(const UserProfile& profile, const Request& request,
                     const SimilarityProvider& provider);
RankedList rank_crec(const UserProfile& profile, const Request& request, Algo mode);
RankedList rank_rrec(const UserProfile& profile, const Request& request);

RankedList rank(const UserProfile& profile, const Request& request, Algo algo,
                const SimilarityProvider& provider);

}  // namespace ctxsugg
