#include "ctxsugg/metrics.hpp"

#include <algorithm>
#include <map>

#include "ctxsugg/error.hpp"

namespace ctxsugg {

bool is_relevant(int rating) {
    if (!rating_in_domain(rating)) {
        raise(ErrorCode::Domain, "rating " + std::to_string(rating) + " outside {-1..4}");
    }
    return rating == 3 || rating == 4;
}

int RequestJudgments::rating_of(const std::string& candidate_id) const {
    auto it = std::lower_bound(
        ratings.begin(), ratings.end(), candidate_id,
        [](const std::pair<std::string, int>& p, const std::string& id) { return p.first < id; });
    if (it == ratings.end() || it->first != candidate_id) return kUnrated;
    return it->second;
}

double precision_at_k(const std::vector<std::string>& ranked, const RequestJudgments& judgments,
                      int k) {
    if (k < 1) raise(ErrorCode::InvalidArgument, "k must be >= 1");
    std::size_t cut = std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
    int relevant = 0;
    for (std::size_t i = 0; i < cut; ++i) {
        // Unjudged ids map to the unrated sentinel, which is non-relevant.
        if (is_relevant(judgments.rating_of(ranked[i]))) ++relevant;
    }
    return static_cast<double>(relevant) / static_cast<double>(k);
}

double reciprocal_rank(const std::vector<std::string>& ranked, const RequestJudgments& judgments) {
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (is_relevant(judgments.rating_of(ranked[i]))) {
            return 1.0 / static_cast<double>(i + 1);
        }
    }
    return 0.0;
}

EvalReport evaluate_run(const RunOrder& run, const std::vector<QrelEntry>& qrels, int k,
                        bool judged_only) {
    if (k < 1) raise(ErrorCode::InvalidArgument, "k must be >= 1");
    if (run.requests.empty()) raise(ErrorCode::EmptyRun, "run contains no requests");

    std::map<std::string, RequestJudgments> by_request;
    for (const auto& entry : qrels) {
        by_request[entry.request_id].ratings.emplace_back(entry.candidate_id, entry.rating);
    }
    for (auto& [id, judgments] : by_request) {
        std::sort(judgments.ratings.begin(), judgments.ratings.end());
    }

    EvalReport report;
    report.k = k;
    double p_sum = 0.0;
    double rr_sum = 0.0;
    static const RequestJudgments kNoJudgments{};
    for (const auto& [request_id, ranked] : run.requests) {
        auto it = by_request.find(request_id);
        const RequestJudgments& judgments = it == by_request.end() ? kNoJudgments : it->second;
        RequestMetrics metrics;
        metrics.request_id = request_id;
        metrics.judged = !judgments.empty();
        metrics.p_at_k = precision_at_k(ranked, judgments, k);
        metrics.reciprocal_rank = reciprocal_rank(ranked, judgments);
        if (!judged_only || metrics.judged) {
            p_sum += metrics.p_at_k;
            rr_sum += metrics.reciprocal_rank;
            ++report.evaluated_requests;
        }
        report.per_request.push_back(std::move(metrics));
    }
    if (report.evaluated_requests > 0) {
        report.mean_p_at_k = p_sum / static_cast<double>(report.evaluated_requests);
        report.mrr = rr_sum / static_cast<double>(report.evaluated_requests);
    }
    return report;
}

}  // namespace ctxsugg
