#pragma once

#include <string>
#include <vector>

#include "ctxsugg/types.hpp"

namespace ctxsugg {

/// A suggestion is relevant iff the user rated it 3 or 4.
bool is_relevant(int rating);

/// Judgments for a single request: candidate id -> rating.
struct RequestJudgments {
    std::vector<std::pair<std::string, int>> ratings;  // sorted by candidate id

    int rating_of(const std::string& candidate_id) const;  // kUnrated when unjudged
    bool empty() const { return ratings.empty(); }
};

/// (# relevant among the first min(k, |ranked|) ids) / k. Ids absent from the
/// judgments count as non-relevant; short lists keep k in the denominator.
double precision_at_k(const std::vector<std::string>& ranked, const RequestJudgments& judgments,
                      int k);

/// 1 / position of the first relevant id (1-based), 0 when none is relevant.
double reciprocal_rank(const std::vector<std::string>& ranked, const RequestJudgments& judgments);

struct RequestMetrics {
    std::string request_id;
    double p_at_k = 0.0;
    double reciprocal_rank = 0.0;
    bool judged = false;

    friend bool operator==(const RequestMetrics&, const RequestMetrics&) = default;
};

struct EvalReport {
    std::vector<RequestMetrics> per_request;  // run order
    double mean_p_at_k = 0.0;
    double mrr = 0.0;
    int k = 5;
    std::size_t evaluated_requests = 0;  // requests contributing to the means
};

/// A run to evaluate: per request the ranked candidate ids, in run order.
struct RunOrder {
    std::vector<std::pair<std::string, std::vector<std::string>>> requests;
};

/// Per-request metrics plus arithmetic means. Requests without judgments
/// contribute (0, 0); with judged_only they are reported but excluded from
/// the means. Throws Error(EmptyRun) for a run without requests.
EvalReport evaluate_run(const RunOrder& run, const std::vector<QrelEntry>& qrels, int k,
                        bool judged_only = false);

}  // namespace ctxsugg
