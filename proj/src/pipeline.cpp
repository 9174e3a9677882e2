#include "ctxsugg/pipeline.hpp"

#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "ctxsugg/error.hpp"

namespace ctxsugg {

std::size_t enrich_profiles(std::vector<UserProfile>& profiles, const Enricher& enricher) {
    std::size_t newly_tagged = 0;
    for (auto& profile : profiles) {
        UserProfile enriched = enricher.enrich_profile(profile);
        for (std::size_t i = 0; i < profile.attractions.size(); ++i) {
            if (profile.attractions[i].tags.empty() && !enriched.attractions[i].tags.empty()) {
                ++newly_tagged;
            }
        }
        profile = std::move(enriched);
    }
    return newly_tagged;
}

std::size_t enrich_requests(std::vector<Request>& requests, const Enricher& enricher) {
    std::size_t newly_tagged = 0;
    for (auto& request : requests) {
        Request enriched = enricher.enrich_candidates(request);
        for (std::size_t i = 0; i < request.candidates.size(); ++i) {
            if (request.candidates[i].tags.empty() && !enriched.candidates[i].tags.empty()) {
                ++newly_tagged;
            }
        }
        request = std::move(enriched);
    }
    return newly_tagged;
}

UserProfile prepared_profile(const UserProfile& profile, const Lexicon& lexicon) {
    UserProfile out = profile;
    for (auto& attraction : out.attractions) {
        attraction.description = filter_description(attraction.description, lexicon);
    }
    return out;
}

Request prepared_request(const Request& request, const Lexicon& lexicon) {
    Request out = request;
    for (auto& candidate : out.candidates) {
        candidate.description = filter_description(candidate.description, lexicon);
    }
    return out;
}

std::vector<RankedList> rank_requests(const std::vector<UserProfile>& profiles,
                                      const std::vector<Request>& requests, Algo algo,
                                      const Lexicon& lexicon, int jobs) {
    std::map<std::string, const UserProfile*> by_user;
    for (const auto& profile : profiles) by_user[profile.user_id] = &profile;

    std::set<std::string> unknown;
    for (const auto& request : requests) {
        if (!by_user.count(request.user_id)) unknown.insert(request.user_id);
    }
    if (!unknown.empty()) {
        std::string msg = "unknown user(s) referenced by requests:";
        for (const auto& user : unknown) msg += " " + user;
        raise(ErrorCode::UnknownUser, msg);
    }

    // Matching and ranking run on stopword/word-class filtered descriptions;
    // the caller's records keep their verbatim tokens.
    std::map<std::string, UserProfile> prepared;
    for (const auto& request : requests) {
        if (!prepared.count(request.user_id)) {
            prepared.emplace(request.user_id, prepared_profile(*by_user[request.user_id], lexicon));
        }
    }

    SimilarityProvider provider(lexicon);
    std::vector<RankedList> lists(requests.size());
    auto rank_one = [&](std::size_t i) {
        lists[i] =
            rank(prepared.at(requests[i].user_id), prepared_request(requests[i], lexicon), algo,
                 provider);
    };

    int workers = std::min<int>(jobs, static_cast<int>(requests.size()));
    if (workers < 2) {
        for (std::size_t i = 0; i < requests.size(); ++i) rank_one(i);
        return lists;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= requests.size()) return;
                rank_one(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return lists;
}

}  // namespace ctxsugg
