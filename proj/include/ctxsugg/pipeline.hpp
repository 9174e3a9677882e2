#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctxsugg/enrich.hpp"
#include "ctxsugg/lexicon.hpp"
#include "ctxsugg/rankers.hpp"
#include "ctxsugg/types.hpp"

namespace ctxsugg {

// Batch orchestration shared by the C API and the CLI.

/// Enriches every profile in place; returns how many attractions gained tags.
std::size_t enrich_profiles(std::vector<UserProfile>& profiles, const Enricher& enricher);

/// Enriches every request's candidates in place; returns how many candidates
/// gained tags.
std::size_t enrich_requests(std::vector<Request>& requests, const Enricher& enricher);

/// Copy of a profile/request with descriptions passed through the stopword
/// and word-class filter. Matching and ranking operate on these; the
/// originals keep their verbatim tokens for serialization.
UserProfile prepared_profile(const UserProfile& profile, const Lexicon& lexicon);
Request prepared_request(const Request& request, const Lexicon& lexicon);

/// Ranks every request against its user's profile. Requests referencing
/// unknown users raise Error(UnknownUser) listing all offenders. Up to `jobs`
/// requests are ranked in parallel; output order matches input order
/// regardless.
std::vector<RankedList> rank_requests(const std::vector<UserProfile>& profiles,
                                      const std::vector<Request>& requests, Algo algo,
                                      const Lexicon& lexicon, int jobs = 1);

}  // namespace ctxsugg
