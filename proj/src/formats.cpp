#include "ctxsugg/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ctxsugg/error.hpp"
#include "ctxsugg/text.hpp"

namespace ctxsugg {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const char* what, std::size_t line_no, const std::string& detail) {
    std::ostringstream msg;
    msg << what << " line " << line_no << ": " << detail;
    raise(ErrorCode::Parse, msg.str());
}

int require_rating(const json& j, const char* what, std::size_t line_no, const std::string& id) {
    if (!j.is_number_integer()) {
        parse_fail(what, line_no, "rating of \"" + id + "\" is not an integer");
    }
    int rating = j.get<int>();
    if (!rating_in_domain(rating)) {
        std::ostringstream msg;
        msg << what << " line " << line_no << ": rating " << rating << " of \"" << id
            << "\" outside {-1..4}";
        raise(ErrorCode::Domain, msg.str());
    }
    return rating;
}

std::string require_string(const json& obj, const char* key, const char* what,
                           std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        parse_fail(what, line_no, std::string("missing or non-string \"") + key + "\"");
    }
    return it->get<std::string>();
}

TagSet parse_tag_array(const json& arr, const char* what, std::size_t line_no) {
    TagSet tags;
    if (!arr.is_array()) parse_fail(what, line_no, "\"tags\" is not an array");
    for (const auto& t : arr) {
        if (!t.is_string()) parse_fail(what, line_no, "tag is not a string");
        add_tag(tags, Tag{normalize_tag(t.get<std::string>()), TagKind::Generic});
    }
    return tags;
}

json tags_to_json(const TagSet& tags) {
    json arr = json::array();
    for (const auto& t : tags) arr.push_back(t.text);
    return arr;
}

// Splits on runs of spaces/tabs.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t') {
            if (!cur.empty()) fields.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) fields.push_back(std::move(cur));
    return fields;
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;  // blank
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<UserProfile> parse_profiles(std::istream& in) {
    std::vector<UserProfile> profiles;
    std::set<std::string> seen_users;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            parse_fail("profiles", line_no, e.what());
        }
        if (!rec.is_object()) parse_fail("profiles", line_no, "record is not an object");
        UserProfile profile;
        profile.user_id = require_string(rec, "user_id", "profiles", line_no);
        auto attractions = rec.find("attractions");
        if (attractions == rec.end() || !attractions->is_array() || attractions->empty()) {
            parse_fail("profiles", line_no, "\"attractions\" missing or empty");
        }
        std::set<std::string> seen_ids;
        for (const auto& a : *attractions) {
            if (!a.is_object()) parse_fail("profiles", line_no, "attraction is not an object");
            ProfileAttraction attraction;
            attraction.id = require_string(a, "id", "profiles", line_no);
            if (!seen_ids.insert(attraction.id).second) {
                raise(ErrorCode::DuplicateId,
                      "profiles line " + std::to_string(line_no) + ": duplicate attraction id \"" +
                          attraction.id + "\"");
            }
            attraction.description =
                make_description(require_string(a, "description", "profiles", line_no));
            auto rating = a.find("rating");
            if (rating == a.end()) parse_fail("profiles", line_no, "missing \"rating\"");
            attraction.rating = require_rating(*rating, "profiles", line_no, attraction.id);
            auto tags = a.find("tags");
            if (tags == a.end()) parse_fail("profiles", line_no, "missing \"tags\"");
            attraction.tags = parse_tag_array(*tags, "profiles", line_no);
            attraction.tags_source = TagSource::UserProvided;
            profile.attractions.push_back(std::move(attraction));
        }
        if (!seen_users.insert(profile.user_id).second) {
            raise(ErrorCode::DuplicateId, "profiles line " + std::to_string(line_no) +
                                              ": duplicate user id \"" + profile.user_id + "\"");
        }
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

std::vector<Request> parse_requests(std::istream& in) {
    std::vector<Request> requests;
    std::set<std::string> seen_requests;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            parse_fail("requests", line_no, e.what());
        }
        if (!rec.is_object()) parse_fail("requests", line_no, "record is not an object");
        Request request;
        request.request_id = require_string(rec, "request_id", "requests", line_no);
        request.user_id = require_string(rec, "user_id", "requests", line_no);
        auto candidates = rec.find("candidates");
        if (candidates == rec.end() || !candidates->is_array()) {
            parse_fail("requests", line_no, "\"candidates\" missing or not an array");
        }
        std::set<std::string> seen_ids;
        for (const auto& c : *candidates) {
            if (!c.is_object()) parse_fail("requests", line_no, "candidate is not an object");
            Candidate candidate;
            candidate.id = require_string(c, "id", "requests", line_no);
            if (!seen_ids.insert(candidate.id).second) {
                raise(ErrorCode::DuplicateId,
                      "requests line " + std::to_string(line_no) + ": duplicate candidate id \"" +
                          candidate.id + "\"");
            }
            candidate.description =
                make_description(require_string(c, "description", "requests", line_no));
            if (auto tags = c.find("tags"); tags != c.end()) {
                candidate.tags = parse_tag_array(*tags, "requests", line_no);
            }
            request.candidates.push_back(std::move(candidate));
        }
        if (!seen_requests.insert(request.request_id).second) {
            raise(ErrorCode::DuplicateId, "requests line " + std::to_string(line_no) +
                                              ": duplicate request id \"" + request.request_id +
                                              "\"");
        }
        requests.push_back(std::move(request));
    }
    return requests;
}

std::vector<Tag> parse_tagset(std::istream& in) {
    std::vector<Tag> tags;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (skippable(line)) continue;
        std::string text = line;
        TagKind kind = TagKind::Generic;
        if (auto tab = line.find('\t'); tab != std::string::npos) {
            text = line.substr(0, tab);
            std::string cls = line.substr(tab + 1);
            if (cls == "G") {
                kind = TagKind::Generic;
            } else if (cls == "S") {
                kind = TagKind::Specific;
            } else {
                parse_fail("tagset", line_no, "unknown class \"" + cls + "\" (expected G or S)");
            }
        }
        std::string normalized = normalize_tag(text);
        if (seen.insert(normalized).second) {
            tags.push_back(Tag{std::move(normalized), kind});
        }
    }
    return tags;
}

std::vector<QrelEntry> parse_qrels(std::istream& in) {
    std::vector<QrelEntry> entries;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (skippable(line)) continue;
        auto fields = split_fields(line);
        if (fields.size() != 4) {
            parse_fail("qrels", line_no, "expected 4 fields, got " + std::to_string(fields.size()));
        }
        QrelEntry entry;
        entry.request_id = fields[0];
        entry.candidate_id = fields[2];
        try {
            std::size_t pos = 0;
            entry.rating = std::stoi(fields[3], &pos);
            if (pos != fields[3].size()) throw std::invalid_argument(fields[3]);
        } catch (const std::exception&) {
            parse_fail("qrels", line_no, "rating \"" + fields[3] + "\" is not an integer");
        }
        if (!rating_in_domain(entry.rating)) {
            raise(ErrorCode::Domain, "qrels line " + std::to_string(line_no) + ": rating " +
                                         fields[3] + " outside {-1..4}");
        }
        if (!seen.insert({entry.request_id, entry.candidate_id}).second) {
            raise(ErrorCode::DuplicateId, "qrels line " + std::to_string(line_no) +
                                              ": duplicate pair (" + entry.request_id + ", " +
                                              entry.candidate_id + ")");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string serialize_profiles(const std::vector<UserProfile>& profiles) {
    std::string out;
    for (const auto& profile : profiles) {
        json attractions = json::array();
        for (const auto& a : profile.attractions) {
            attractions.push_back({{"description", join_tokens(a.description.tokens)},
                                   {"id", a.id},
                                   {"rating", a.rating},
                                   {"tags", tags_to_json(a.tags)}});
        }
        json rec{{"attractions", attractions}, {"user_id", profile.user_id}};
        out += rec.dump();
        out.push_back('\n');
    }
    return out;
}

std::string serialize_requests(const std::vector<Request>& requests) {
    std::string out;
    for (const auto& request : requests) {
        json candidates = json::array();
        for (const auto& c : request.candidates) {
            candidates.push_back({{"description", join_tokens(c.description.tokens)},
                                  {"id", c.id},
                                  {"tags", tags_to_json(c.tags)}});
        }
        json rec{{"candidates", candidates},
                 {"request_id", request.request_id},
                 {"user_id", request.user_id}};
        out += rec.dump();
        out.push_back('\n');
    }
    return out;
}

std::string serialize_tagset(const std::vector<Tag>& tags) {
    std::string out;
    for (const auto& tag : tags) {
        out += tag.text;
        out.push_back('\t');
        out.push_back(tag.kind == TagKind::Specific ? 'S' : 'G');
        out.push_back('\n');
    }
    return out;
}

std::string serialize_qrels(const std::vector<QrelEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.request_id;
        out += " 0 ";
        out += e.candidate_id;
        out.push_back(' ');
        out += std::to_string(e.rating);
        out.push_back('\n');
    }
    return out;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::Io, "cannot open \"" + path + "\" for reading");
    return in;
}

}  // namespace

std::vector<UserProfile> load_profiles(const std::string& path) {
    auto in = open_input(path);
    return parse_profiles(in);
}

std::vector<Request> load_requests(const std::string& path) {
    auto in = open_input(path);
    return parse_requests(in);
}

std::vector<Tag> load_tagset(const std::string& path) {
    auto in = open_input(path);
    return parse_tagset(in);
}

std::vector<QrelEntry> load_qrels(const std::string& path) {
    auto in = open_input(path);
    return parse_qrels(in);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::Io, "cannot open \"" + path + "\" for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) raise(ErrorCode::Io, "short write to \"" + path + "\"");
}

}  // namespace ctxsugg
