#include "ctxsugg/runfile.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>

#include "ctxsugg/error.hpp"

namespace ctxsugg {

namespace {

bool has_whitespace(const std::string& s) {
    return s.find_first_of(" \t\r\n\v\f") != std::string::npos;
}

void require_token(const std::string& s, const char* what) {
    if (s.empty()) raise(ErrorCode::Format, std::string(what) + " is empty");
    if (has_whitespace(s)) {
        raise(ErrorCode::Format, std::string(what) + " \"" + s + "\" contains whitespace");
    }
}

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", score);
    return buf;
}

}  // namespace

double run_score(const ScoredCandidate& entry, Algo algo) {
    if (algo == Algo::RRec) {
        // Flatten the (rating, score) key so the column sorts like the list.
        return static_cast<double>(entry.inherited_rating) + entry.primary_score / 1000.0;
    }
    return entry.primary_score;
}

std::string write_runfile(const std::vector<RankedList>& lists, Algo algo,
                          const std::string& run_tag) {
    require_token(run_tag, "run tag");
    std::string out;
    for (const auto& list : lists) {
        require_token(list.request_id, "request id");
        std::size_t rank = 0;
        for (const auto& entry : list.entries) {
            require_token(entry.candidate_id, "candidate id");
            ++rank;
            out += list.request_id;
            out += " Q0 ";
            out += entry.candidate_id;
            out.push_back(' ');
            out += std::to_string(rank);
            out.push_back(' ');
            out += format_score(run_score(entry, algo));
            out.push_back(' ');
            out += run_tag;
            out.push_back('\n');
        }
    }
    return out;
}

RunOrder parse_runfile(std::istream& in) {
    struct Row {
        std::string candidate_id;
        long rank;
    };
    std::vector<std::pair<std::string, std::vector<Row>>> requests;  // first-appearance order
    std::map<std::string, std::size_t> index;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
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
        if (fields.size() != 6) {
            raise(ErrorCode::Parse, "run line " + std::to_string(line_no) +
                                        ": expected 6 columns, got " +
                                        std::to_string(fields.size()));
        }
        long rank = 0;
        try {
            std::size_t pos = 0;
            rank = std::stol(fields[3], &pos);
            if (pos != fields[3].size() || rank < 1) throw std::invalid_argument(fields[3]);
        } catch (const std::exception&) {
            raise(ErrorCode::Parse,
                  "run line " + std::to_string(line_no) + ": bad rank \"" + fields[3] + "\"");
        }
        try {
            std::size_t pos = 0;
            (void)std::stod(fields[4], &pos);
            if (pos != fields[4].size()) throw std::invalid_argument(fields[4]);
        } catch (const std::exception&) {
            raise(ErrorCode::Parse,
                  "run line " + std::to_string(line_no) + ": bad score \"" + fields[4] + "\"");
        }
        auto [it, inserted] = index.try_emplace(fields[0], requests.size());
        if (inserted) requests.emplace_back(fields[0], std::vector<Row>{});
        requests[it->second].second.push_back(Row{fields[2], rank});
    }

    RunOrder run;
    for (auto& [request_id, rows] : requests) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const Row& a, const Row& b) { return a.rank < b.rank; });
        std::vector<std::string> ids;
        ids.reserve(rows.size());
        for (auto& row : rows) ids.push_back(std::move(row.candidate_id));
        run.requests.emplace_back(request_id, std::move(ids));
    }
    return run;
}

RunOrder load_runfile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::Io, "cannot open \"" + path + "\" for reading");
    return parse_runfile(in);
}

}  // namespace ctxsugg
