#include <doctest.h>

#include <sstream>

#include "ctxsugg/error.hpp"
#include "ctxsugg/runfile.hpp"

#include "generators.hpp"

using namespace ctxsugg;

TEST_CASE("write_runfile formats one line per entry") {
    RankedList list;
    list.request_id = "u1-c1";
    list.entries = {{"c1", 1.0, 0.0, 4}};
    auto text = write_runfile({list}, Algo::RRec, "ctxsugg-r-rec");
    CHECK(text == "u1-c1 Q0 c1 1 4.001000 ctxsugg-r-rec\n");

    auto drec = write_runfile({list}, Algo::DRec, "ctxsugg-drec");
    CHECK(drec == "u1-c1 Q0 c1 1 1.000000 ctxsugg-drec\n");
}

TEST_CASE("empty ranked lists emit no lines") {
    RankedList list;
    list.request_id = "r1";
    CHECK(write_runfile({list}, Algo::DRec, "tag").empty());
}

TEST_CASE("whitespace in the run tag or ids is rejected") {
    RankedList list;
    list.request_id = "r1";
    list.entries = {{"c1", 0.5, 0.0, -1}};
    CHECK_THROWS_AS(write_runfile({list}, Algo::DRec, "my tag"), Error);
    CHECK_THROWS_AS(write_runfile({list}, Algo::DRec, ""), Error);
    list.entries[0].candidate_id = "c 1";
    try {
        write_runfile({list}, Algo::DRec, "tag");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Format);
    }
}

TEST_CASE("r-rec scores flatten the rating and stay order-consistent") {
    RankedList list;
    list.request_id = "r1";
    list.entries = {{"a", 0.2, 0.0, 4}, {"b", 1.0, 0.0, 3}, {"c", 0.0, 0.0, -1}};
    CHECK(run_score(list.entries[0], Algo::RRec) > run_score(list.entries[1], Algo::RRec));
    CHECK(run_score(list.entries[1], Algo::RRec) > run_score(list.entries[2], Algo::RRec));
    CHECK(run_score(list.entries[2], Algo::RRec) == -1.0);
}

TEST_CASE("run files round-trip the ranked id order") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        auto inst = testgen::make_ranker_instance(seed);
        SimilarityProvider provider(inst.lexicon);
        for (Algo algo : {Algo::DRec, Algo::CovRec, Algo::CmpRec, Algo::RRec}) {
            auto list = rank(inst.profile, inst.request, algo, provider);
            auto text = write_runfile({list}, algo, "tag");
            std::istringstream in(text);
            auto order = parse_runfile(in);
            if (list.entries.empty()) {
                CHECK(order.requests.empty());
                continue;
            }
            REQUIRE(order.requests.size() == 1);
            CHECK(order.requests[0].first == inst.request.request_id);
            std::vector<std::string> expected;
            for (const auto& e : list.entries) expected.push_back(e.candidate_id);
            CHECK(order.requests[0].second == expected);
        }
    }
}

TEST_CASE("parse_runfile rejects malformed lines") {
    std::istringstream missing("r1 Q0 c1 1 0.5\n");
    CHECK_THROWS_AS(parse_runfile(missing), Error);
    std::istringstream bad_rank("r1 Q0 c1 zero 0.5 tag\n");
    CHECK_THROWS_AS(parse_runfile(bad_rank), Error);
    std::istringstream bad_score("r1 Q0 c1 1 x tag\n");
    CHECK_THROWS_AS(parse_runfile(bad_score), Error);
}

TEST_CASE("parse_runfile keeps requests in first-appearance order") {
    std::istringstream in(
        "r2 Q0 a 1 1.000000 t\n"
        "r1 Q0 b 1 1.000000 t\n"
        "r2 Q0 c 2 0.500000 t\n");
    auto order = parse_runfile(in);
    REQUIRE(order.requests.size() == 2);
    CHECK(order.requests[0].first == "r2");
    CHECK(order.requests[0].second == std::vector<std::string>{"a", "c"});
    CHECK(order.requests[1].first == "r1");
}
