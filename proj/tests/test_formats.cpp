#include <doctest.h>

#include <functional>
#include <sstream>

#include "ctxsugg/error.hpp"
#include "ctxsugg/formats.hpp"

using namespace ctxsugg;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

std::vector<UserProfile> profiles_from(const std::string& text) {
    std::istringstream in(text);
    return parse_profiles(in);
}

std::vector<Request> requests_from(const std::string& text) {
    std::istringstream in(text);
    return parse_requests(in);
}

std::vector<Tag> tagset_from(const std::string& text) {
    std::istringstream in(text);
    return parse_tagset(in);
}

std::vector<QrelEntry> qrels_from(const std::string& text) {
    std::istringstream in(text);
    return parse_qrels(in);
}

}  // namespace

TEST_CASE("parse_profiles reads a minimal record") {
    auto profiles = profiles_from(
        R"({"user_id":"u1","attractions":[{"id":"a1","description":"sunny beach","rating":4,"tags":["Food"]}]})"
        "\n");
    REQUIRE(profiles.size() == 1);
    REQUIRE(profiles[0].attractions.size() == 1);
    const auto& a = profiles[0].attractions[0];
    CHECK(a.rating == 4);
    CHECK(a.description.tokens == std::vector<std::string>{"sunny", "beach"});
    REQUIRE(a.tags.size() == 1);
    CHECK(a.tags[0].text == "food");
    CHECK(a.tags_source == TagSource::UserProvided);
}

TEST_CASE("parse_profiles rejects out-of-domain ratings") {
    auto code = code_of([] {
        profiles_from(
            R"({"user_id":"u1","attractions":[{"id":"a1","description":"x","rating":7,"tags":[]}]})");
    });
    CHECK(code == ErrorCode::Domain);
}

TEST_CASE("parse_profiles rejects duplicate attraction ids") {
    auto code = code_of([] {
        profiles_from(
            R"({"user_id":"u1","attractions":[{"id":"a1","description":"x","rating":1,"tags":[]},)"
            R"({"id":"a1","description":"y","rating":2,"tags":[]}]})");
    });
    CHECK(code == ErrorCode::DuplicateId);
}

TEST_CASE("parse_profiles reports line numbers on malformed input") {
    try {
        profiles_from("{\"user_id\":\"u1\",\"attractions\":[{\"id\":\"a\",\"description\":\"d\","
                      "\"rating\":1,\"tags\":[]}]}\nnot json\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parse_requests reads untagged candidates") {
    auto requests = requests_from(
        R"({"request_id":"r1","user_id":"u1","candidates":[{"id":"c1","description":"quiet park"},)"
        R"({"id":"c2","description":"busy mall"}]})"
        "\n");
    REQUIRE(requests.size() == 1);
    REQUIRE(requests[0].candidates.size() == 2);
    CHECK(requests[0].candidates[0].tags.empty());
    CHECK(requests[0].candidates[1].tags.empty());
}

TEST_CASE("parse_requests rejects duplicate candidate ids") {
    auto code = code_of([] {
        requests_from(
            R"({"request_id":"r1","user_id":"u1","candidates":[{"id":"c1","description":"x"},)"
            R"({"id":"c1","description":"y"}]})");
    });
    CHECK(code == ErrorCode::DuplicateId);
}

TEST_CASE("parse_requests accepts an empty candidate pool") {
    auto requests = requests_from(R"({"request_id":"r1","user_id":"u1","candidates":[]})");
    REQUIRE(requests.size() == 1);
    CHECK(requests[0].candidates.empty());
}

TEST_CASE("parse_tagset classifies and deduplicates") {
    auto tags = tagset_from("Food\tG\nShopping for shoes\tS\nfood\n# comment\nBeach\n");
    REQUIRE(tags.size() == 3);
    CHECK(tags[0].text == "food");
    CHECK(tags[0].kind == TagKind::Generic);
    CHECK(tags[1].text == "shopping for shoes");
    CHECK(tags[1].kind == TagKind::Specific);
    CHECK(tags[2].text == "beach");
    CHECK(tags[2].kind == TagKind::Generic);
}

TEST_CASE("parse_tagset rejects unknown classes") {
    auto code = code_of([] { tagset_from("Food\tX\n"); });
    CHECK(code == ErrorCode::Parse);
}

TEST_CASE("parse_qrels reads entries and validates") {
    auto entries = qrels_from("u1-c1 0 att42 4\n");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].request_id == "u1-c1");
    CHECK(entries[0].candidate_id == "att42");
    CHECK(entries[0].rating == 4);

    CHECK(code_of([] { qrels_from("u1-c1 0 att42 9\n"); }) == ErrorCode::Domain);
    CHECK(code_of([] { qrels_from("u1-c1 0 att42 4\nu1-c1 0 att42 3\n"); }) ==
          ErrorCode::DuplicateId);
    CHECK(code_of([] { qrels_from("u1-c1 0 att42\n"); }) == ErrorCode::Parse);
}

TEST_CASE("profiles round-trip through serialization") {
    std::string text =
        R"({"attractions":[{"description":"sunny beach walk","id":"a1","rating":4,"tags":["beach","food"]},)"
        R"({"description":"","id":"a2","rating":-1,"tags":[]}],"user_id":"u1"})"
        "\n";
    auto profiles = profiles_from(text);
    CHECK(serialize_profiles(profiles) == text);
    auto reparsed = profiles_from(serialize_profiles(profiles));
    CHECK(reparsed == profiles);
}

TEST_CASE("requests round-trip through serialization") {
    std::string text =
        R"({"candidates":[{"description":"quiet park","id":"c1","tags":[]}],"request_id":"r1","user_id":"u1"})"
        "\n";
    auto requests = requests_from(text);
    CHECK(serialize_requests(requests) == text);
    CHECK(requests_from(serialize_requests(requests)) == requests);
}

TEST_CASE("tagset and qrels round-trip") {
    auto tags = tagset_from("food\tG\nscenic railroads\tS\n");
    auto tags2 = tagset_from(serialize_tagset(tags));
    REQUIRE(tags2.size() == tags.size());
    for (std::size_t i = 0; i < tags.size(); ++i) {
        CHECK(tags2[i].text == tags[i].text);
        CHECK(tags2[i].kind == tags[i].kind);
    }

    auto qrels = qrels_from("r1 0 c1 4\nr1 0 c2 -1\n");
    CHECK(qrels_from(serialize_qrels(qrels)) == qrels);
}
