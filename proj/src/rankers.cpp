#include "ctxsugg/rankers.hpp"

#include <algorithm>

#include "ctxsugg/error.hpp"
#include "ctxsugg/text.hpp"

namespace ctxsugg {

const char* algo_name(Algo algo) noexcept {
    switch (algo) {
        case Algo::DRec: return "drec";
        case Algo::CovRec: return "cov-rec";
        case Algo::CmpRec: return "cmp-rec";
        case Algo::RRec: return "r-rec";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    if (name == "drec") return Algo::DRec;
    if (name == "cov-rec") return Algo::CovRec;
    if (name == "cmp-rec") return Algo::CmpRec;
    if (name == "r-rec") return Algo::RRec;
    raise(ErrorCode::InvalidArgument,
          "unknown algorithm \"" + name + "\" (expected drec, cov-rec, cmp-rec or r-rec)");
}

double desc_pair_score(const Description& d_u, const Description& d_c,
                       const SimilarityProvider& provider) {
    if (d_u.empty() || d_c.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& a : d_u.tokens) {
        for (const auto& b : d_c.tokens) {
            sum += provider.word_similarity(a, b);
        }
    }
    return sum / (static_cast<double>(d_u.size()) * static_cast<double>(d_c.size()));
}

std::vector<std::string> tag_phrase(const TagSet& tags) {
    // Tags are stored in ascending text order already; each tag contributes
    // its words in place.
    std::vector<std::string> phrase;
    for (const auto& tag : tags) {
        for (auto& word : tokenize_words(tag.text)) {
            phrase.push_back(std::move(word));
        }
    }
    return phrase;
}

double tag_phrase_score(const TagSet& tags_u, const Description& d_c,
                        const SimilarityProvider& provider) {
    Description phrase{tag_phrase(tags_u)};
    return desc_pair_score(phrase, d_c, provider);
}

namespace {

// Descending primary, then descending secondary, then ascending id.
void sort_by_scores(std::vector<ScoredCandidate>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const ScoredCandidate& a, const ScoredCandidate& b) {
                  if (a.primary_score != b.primary_score) return a.primary_score > b.primary_score;
                  if (a.secondary_score != b.secondary_score) {
                      return a.secondary_score > b.secondary_score;
                  }
                  return a.candidate_id < b.candidate_id;
              });
}

}  // namespace

RankedList rank_drec(const UserProfile& profile, const Request& request,
                     const SimilarityProvider& provider) {
    RankedList list;
    list.request_id = request.request_id;
    list.entries.reserve(request.candidates.size());
    for (const auto& candidate : request.candidates) {
        ScoredCandidate entry;
        entry.candidate_id = candidate.id;
        // Best-matching past attraction, for the tag phrase and the
        // description independently.
        for (const auto& attraction : profile.attractions) {
            entry.primary_score =
                std::max(entry.primary_score,
                         tag_phrase_score(attraction.tags, candidate.description, provider));
            entry.secondary_score =
                std::max(entry.secondary_score,
                         desc_pair_score(attraction.description, candidate.description, provider));
        }
        list.entries.push_back(std::move(entry));
    }
    sort_by_scores(list.entries);
    return list;
}

TagSet profile_tag_union(const UserProfile& profile) {
    TagSet tau;
    for (const auto& attraction : profile.attractions) {
        for (const auto& tag : attraction.tags) add_tag(tau, tag);
    }
    return tau;
}

double coverage(const TagSet& tau, const TagSet& t_c) {
    if (tau.empty()) return 0.0;
    return static_cast<double>(intersect_tags(tau, t_c).size()) /
           static_cast<double>(tau.size());
}

double completeness(const UserProfile& profile, const TagSet& t_c) {
    std::size_t matched = 0;
    std::size_t total = 0;
    for (const auto& attraction : profile.attractions) {
        matched += intersect_tags(attraction.tags, t_c).size();
        total += attraction.tags.size();
    }
    if (total == 0) return 0.0;
    return static_cast<double>(matched) / static_cast<double>(total);
}

RankedList rank_crec(const UserProfile& profile, const Request& request, Algo mode) {
    if (mode != Algo::CovRec && mode != Algo::CmpRec) {
        raise(ErrorCode::InvalidArgument, "rank_crec expects cov-rec or cmp-rec");
    }
    TagSet tau = profile_tag_union(profile);
    RankedList list;
    list.request_id = request.request_id;
    list.entries.reserve(request.candidates.size());
    for (const auto& candidate : request.candidates) {
        double theta = coverage(tau, candidate.tags);
        double omega = completeness(profile, candidate.tags);
        ScoredCandidate entry;
        entry.candidate_id = candidate.id;
        entry.primary_score = mode == Algo::CovRec ? theta : omega;
        entry.secondary_score = mode == Algo::CovRec ? omega : theta;
        list.entries.push_back(std::move(entry));
    }
    sort_by_scores(list.entries);
    return list;
}

double RatingIndex::score(int rating, const std::string& tag) const {
    auto by_rating = scores.find(rating);
    if (by_rating == scores.end()) return 0.0;
    auto it = by_rating->second.find(tag);
    return it == by_rating->second.end() ? 0.0 : it->second;
}

RatingIndex build_rating_index(const UserProfile& profile) {
    RatingIndex index;
    for (int rating = kMinRating; rating <= kMaxRating; ++rating) {
        index.totals[rating] = 0;
    }
    for (const auto& attraction : profile.attractions) {
        for (const auto& tag : attraction.tags) {
            index.counts[attraction.rating][tag.text] += 1;
            index.totals[attraction.rating] += 1;
        }
    }
    for (const auto& [rating, tag_counts] : index.counts) {
        int total = index.totals[rating];
        if (total == 0) continue;
        auto& rating_scores = index.scores[rating];
        for (const auto& [tag, count] : tag_counts) {
            rating_scores[tag] = static_cast<double>(count) / static_cast<double>(total);
        }
    }
    return index;
}

double candidate_match_score(const Candidate& candidate, const ProfileAttraction& attraction,
                             const RatingIndex& index) {
    double sum = 0.0;
    // Two-pointer walk keeps the summation in ascending tag order.
    auto ic = candidate.tags.begin();
    auto ia = attraction.tags.begin();
    while (ic != candidate.tags.end() && ia != attraction.tags.end()) {
        if (ic->text == ia->text) {
            sum += index.score(attraction.rating, ic->text);
            ++ic;
            ++ia;
        } else if (ic->text < ia->text) {
            ++ic;
        } else {
            ++ia;
        }
    }
    return sum;
}

RankedList rank_rrec(const UserProfile& profile, const Request& request) {
    RatingIndex index = build_rating_index(profile);
    RankedList list;
    list.request_id = request.request_id;
    list.entries.reserve(request.candidates.size());
    for (const auto& candidate : request.candidates) {
        double best = 0.0;
        int best_rating = kUnrated;
        bool matched = false;
        for (const auto& attraction : profile.attractions) {
            double s = candidate_match_score(candidate, attraction, index);
            if (s <= 0.0) continue;
            // Ties across attractions go to the higher rating; the earlier
            // attraction wins an exact (score, rating) tie.
            if (!matched || s > best || (s == best && attraction.rating > best_rating)) {
                best = s;
                best_rating = attraction.rating;
                matched = true;
            }
        }
        ScoredCandidate entry;
        entry.candidate_id = candidate.id;
        entry.primary_score = matched ? best : 0.0;
        entry.inherited_rating = matched ? best_rating : kUnrated;
        list.entries.push_back(std::move(entry));
    }
    std::sort(list.entries.begin(), list.entries.end(),
              [](const ScoredCandidate& a, const ScoredCandidate& b) {
                  if (a.inherited_rating != b.inherited_rating) {
                      return a.inherited_rating > b.inherited_rating;
                  }
                  if (a.primary_score != b.primary_score) return a.primary_score > b.primary_score;
                  return a.candidate_id < b.candidate_id;
              });
    return list;
}

RankedList rank(const UserProfile& profile, const Request& request, Algo algo,
                const SimilarityProvider& provider) {
    switch (algo) {
        case Algo::DRec: return rank_drec(profile, request, provider);
        case Algo::CovRec:
        case Algo::CmpRec: return rank_crec(profile, request, algo);
        case Algo::RRec: return rank_rrec(profile, request);
    }
    raise(ErrorCode::InvalidArgument, "unknown algorithm");
}

}  // namespace ctxsugg
