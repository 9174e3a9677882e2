#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ctxsugg/metrics.hpp"
#include "ctxsugg/rankers.hpp"

namespace ctxsugg {

/// Numeric run-file column for one entry. D-Rec and C-Rec emit the primary
/// score; R-Rec flattens its composite key as rating + score/1000 so the
/// column stays order-consistent with the ranking.
double run_score(const ScoredCandidate& entry, Algo algo);

/// TREC run lines "<request_id> Q0 <candidate_id> <rank> <score> <run_tag>",
/// rank 1-based, score with 6 decimals, LF endings, trailing newline.
/// Throws Error(Format) for an empty run tag or whitespace in ids or tag.
std::string write_runfile(const std::vector<RankedList>& lists, Algo algo,
                          const std::string& run_tag);

/// Reads a run file back into per-request ranked id order (requests in first
/// appearance order, entries by rank).
RunOrder parse_runfile(std::istream& in);
RunOrder load_runfile(const std::string& path);

}  // namespace ctxsugg
