#include <doctest.h>

#include "ctxsugg/error.hpp"
#include "ctxsugg/pipeline.hpp"
#include "ctxsugg/runfile.hpp"

#include "generators.hpp"

using namespace ctxsugg;

namespace {

std::vector<Request> sample_requests(int count) {
    std::vector<Request> requests;
    for (int i = 0; i < count; ++i) {
        auto inst = testgen::make_ranker_instance(static_cast<std::uint32_t>(i));
        Request r = inst.request;
        r.request_id = "req-" + std::to_string(i);
        requests.push_back(std::move(r));
    }
    return requests;
}

}  // namespace

TEST_CASE("rank_requests rejects unknown users listing offenders") {
    std::vector<UserProfile> profiles(1);
    profiles[0].user_id = "known";
    profiles[0].attractions.emplace_back();
    std::vector<Request> requests(2);
    requests[0].request_id = "r1";
    requests[0].user_id = "ghost";
    requests[1].request_id = "r2";
    requests[1].user_id = "phantom";
    try {
        rank_requests(profiles, requests, Algo::RRec, Lexicon{});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownUser);
        std::string msg = e.what();
        CHECK(msg.find("ghost") != std::string::npos);
        CHECK(msg.find("phantom") != std::string::npos);
    }
}

TEST_CASE("parallel ranking output is identical to sequential") {
    auto inst = testgen::make_ranker_instance(5);
    std::vector<UserProfile> profiles = {inst.profile};
    auto requests = sample_requests(16);
    for (auto& r : requests) r.user_id = inst.profile.user_id;

    auto sequential = rank_requests(profiles, requests, Algo::RRec, inst.lexicon, 1);
    for (int jobs : {2, 4, 8}) {
        CHECK(rank_requests(profiles, requests, Algo::RRec, inst.lexicon, jobs) == sequential);
    }
    CHECK(write_runfile(sequential, Algo::RRec, "t") ==
          write_runfile(rank_requests(profiles, requests, Algo::RRec, inst.lexicon, 4),
                        Algo::RRec, "t"));
}

TEST_CASE("ranking filters descriptions without mutating the inputs") {
    Lexicon lexicon;
    lexicon.add_stopword("the");

    std::vector<UserProfile> profiles(1);
    profiles[0].user_id = "u1";
    ProfileAttraction a;
    a.id = "a1";
    a.rating = 4;
    a.description.tokens = {"the", "beach"};
    profiles[0].attractions = {a};

    std::vector<Request> requests(1);
    requests[0].request_id = "r1";
    requests[0].user_id = "u1";
    Candidate c1;
    c1.id = "c1";
    c1.description.tokens = {"beach"};
    Candidate c2;
    c2.id = "c2";
    c2.description.tokens = {"the"};  // only a stopword: empty after filtering
    requests[0].candidates = {c1, c2};

    auto lists = rank_requests(profiles, requests, Algo::DRec, lexicon);
    REQUIRE(lists.size() == 1);
    // with "the" filtered, c1 scores 1.0 on the description axis
    CHECK(lists[0].entries[0].candidate_id == "c1");
    CHECK(lists[0].entries[0].secondary_score == 1.0);
    CHECK(lists[0].entries[1].secondary_score == 0.0);
    // inputs keep their verbatim tokens
    CHECK(profiles[0].attractions[0].description.tokens ==
          std::vector<std::string>{"the", "beach"});

    auto unfiltered = rank_requests(profiles, requests, Algo::DRec, Lexicon{});
    CHECK(unfiltered[0].entries[0].secondary_score == 0.5);
}

TEST_CASE("enrich counters report newly tagged records only") {
    Lexicon lexicon;
    lexicon.add_synonym("meal", "food", 0.8);
    SimilarityProvider provider(lexicon);
    Enricher enricher({Tag{"food"}}, provider);

    std::vector<UserProfile> profiles(1);
    profiles[0].user_id = "u1";
    ProfileAttraction tagged;
    tagged.id = "a1";
    tagged.description.tokens = {"meal"};
    add_tag(tagged.tags, Tag{"beach"});
    ProfileAttraction fresh;
    fresh.id = "a2";
    fresh.description.tokens = {"meal"};
    ProfileAttraction hopeless;
    hopeless.id = "a3";
    hopeless.description.tokens = {"opera"};
    profiles[0].attractions = {tagged, fresh, hopeless};

    CHECK(enrich_profiles(profiles, enricher) == 1);
    CHECK(enrich_profiles(profiles, enricher) == 0);  // idempotent

    std::vector<Request> requests(1);
    requests[0].request_id = "r1";
    requests[0].user_id = "u1";
    Candidate c;
    c.id = "c1";
    c.description.tokens = {"meal"};
    requests[0].candidates = {c};
    CHECK(enrich_requests(requests, enricher) == 1);
    CHECK(enrich_requests(requests, enricher) == 0);
}
