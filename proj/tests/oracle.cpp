#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace testoracle {

namespace {

using ctxsugg::Candidate;
using ctxsugg::ProfileAttraction;
using ctxsugg::Request;
using ctxsugg::UserProfile;

std::set<std::string> tag_texts(const ctxsugg::TagSet& tags) {
    std::set<std::string> out;
    for (const auto& t : tags) out.insert(t.text);
    return out;
}

// Splits a normalized tag text into words, skipping words without any
// alphanumeric content (a lone "&").
std::vector<std::string> tag_words(const std::string& text) {
    std::vector<std::string> words;
    std::string cur;
    auto flush = [&] {
        bool alnum = false;
        for (unsigned char c : cur) {
            if (std::isalnum(c) || c >= 0x80) alnum = true;
        }
        if (!cur.empty() && alnum) words.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == ' ') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return words;
}

double mean_pair_sim(const std::vector<std::string>& left, const std::vector<std::string>& right,
                     const SynPairs& pairs) {
    if (left.empty() || right.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& a : left) {
        for (const auto& b : right) {
            sum += word_sim(pairs, a, b);
        }
    }
    return sum / (static_cast<double>(left.size()) * static_cast<double>(right.size()));
}

struct Row {
    std::string id;
    double primary = 0.0;
    double secondary = 0.0;
    int rating = -1;
};

std::vector<std::string> ids_sorted_by_scores(std::vector<Row> rows) {
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.primary != b.primary) return a.primary > b.primary;
        if (a.secondary != b.secondary) return a.secondary > b.secondary;
        return a.id < b.id;
    });
    std::vector<std::string> ids;
    for (auto& r : rows) ids.push_back(std::move(r.id));
    return ids;
}

}  // namespace

double word_sim(const SynPairs& pairs, const std::string& a, const std::string& b) {
    if (a == b) return 1.0;
    double best = 0.0;
    for (const auto& [x, y, w] : pairs) {
        if ((x == a && y == b) || (x == b && y == a)) best = std::max(best, w);
    }
    return best;
}

std::vector<std::string> order_drec(const UserProfile& profile, const Request& request,
                                    const SynPairs& pairs) {
    std::vector<Row> rows;
    for (const Candidate& c : request.candidates) {
        Row row{c.id};
        for (const ProfileAttraction& a : profile.attractions) {
            std::vector<std::string> phrase;
            for (const auto& text : tag_texts(a.tags)) {
                for (auto& w : tag_words(text)) phrase.push_back(std::move(w));
            }
            row.primary = std::max(row.primary, mean_pair_sim(phrase, c.description.tokens, pairs));
            row.secondary = std::max(
                row.secondary, mean_pair_sim(a.description.tokens, c.description.tokens, pairs));
        }
        rows.push_back(std::move(row));
    }
    return ids_sorted_by_scores(std::move(rows));
}

std::vector<std::string> order_crec(const UserProfile& profile, const Request& request,
                                    bool coverage_first) {
    std::set<std::string> tau;
    for (const auto& a : profile.attractions) {
        for (const auto& t : a.tags) tau.insert(t.text);
    }
    std::vector<Row> rows;
    for (const Candidate& c : request.candidates) {
        std::set<std::string> ct = tag_texts(c.tags);
        double theta = 0.0;
        if (!tau.empty()) {
            std::size_t hit = 0;
            for (const auto& t : tau) hit += ct.count(t);
            theta = static_cast<double>(hit) / static_cast<double>(tau.size());
        }
        std::size_t matched = 0;
        std::size_t total = 0;
        for (const auto& a : profile.attractions) {
            for (const auto& t : tag_texts(a.tags)) {
                ++total;
                matched += ct.count(t);
            }
        }
        double omega =
            total == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(total);
        Row row{c.id};
        row.primary = coverage_first ? theta : omega;
        row.secondary = coverage_first ? omega : theta;
        rows.push_back(std::move(row));
    }
    return ids_sorted_by_scores(std::move(rows));
}

std::vector<std::string> order_rrec(const UserProfile& profile, const Request& request) {
    std::map<int, int> totals;
    std::map<int, std::map<std::string, int>> counts;
    for (const auto& a : profile.attractions) {
        for (const auto& t : tag_texts(a.tags)) {
            totals[a.rating] += 1;
            counts[a.rating][t] += 1;
        }
    }

    std::vector<Row> rows;
    for (const Candidate& c : request.candidates) {
        std::set<std::string> ct = tag_texts(c.tags);
        Row row{c.id};
        bool matched = false;
        for (const auto& a : profile.attractions) {
            double s = 0.0;
            for (const auto& t : tag_texts(a.tags)) {  // ascending text order
                if (ct.count(t) && totals[a.rating] > 0) {
                    s += static_cast<double>(counts[a.rating][t]) /
                         static_cast<double>(totals[a.rating]);
                }
            }
            if (s <= 0.0) continue;
            if (!matched || s > row.primary || (s == row.primary && a.rating > row.rating)) {
                row.primary = s;
                row.rating = a.rating;
                matched = true;
            }
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.rating != b.rating) return a.rating > b.rating;
        if (a.primary != b.primary) return a.primary > b.primary;
        return a.id < b.id;
    });
    std::vector<std::string> ids;
    for (auto& r : rows) ids.push_back(std::move(r.id));
    return ids;
}

}  // namespace testoracle
