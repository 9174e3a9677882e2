#include "ctxsugg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "ctxsugg/enrich.hpp"
#include "ctxsugg/error.hpp"
#include "ctxsugg/formats.hpp"
#include "ctxsugg/lexicon.hpp"
#include "ctxsugg/metrics.hpp"
#include "ctxsugg/pipeline.hpp"
#include "ctxsugg/rankers.hpp"
#include "ctxsugg/runfile.hpp"

// Opaque handle definitions: each wraps the corresponding core value.
struct ctxsugg_lexicon {
    ctxsugg::Lexicon lexicon;
};
struct ctxsugg_tagset {
    std::vector<ctxsugg::Tag> tags;
};
struct ctxsugg_profiles {
    std::vector<ctxsugg::UserProfile> profiles;
};
struct ctxsugg_requests {
    std::vector<ctxsugg::Request> requests;
};
struct ctxsugg_qrels {
    std::vector<ctxsugg::QrelEntry> entries;
};
struct ctxsugg_run {
    // Either produced by ranking (lists + algo) or parsed from a file (order
    // only).
    std::vector<ctxsugg::RankedList> lists;
    ctxsugg::Algo algo = ctxsugg::Algo::DRec;
    bool ranked = false;
    ctxsugg::RunOrder order;
};
struct ctxsugg_report {
    ctxsugg::EvalReport report;
};

namespace {

thread_local std::string t_last_error;

ctxsugg_status status_of(ctxsugg::ErrorCode code) {
    using ctxsugg::ErrorCode;
    switch (code) {
        case ErrorCode::Io: return CTXSUGG_ERR_IO;
        case ErrorCode::Parse: return CTXSUGG_ERR_PARSE;
        case ErrorCode::Domain: return CTXSUGG_ERR_DOMAIN;
        case ErrorCode::DuplicateId: return CTXSUGG_ERR_DUPLICATE_ID;
        case ErrorCode::UnknownUser: return CTXSUGG_ERR_UNKNOWN_USER;
        case ErrorCode::Format: return CTXSUGG_ERR_FORMAT;
        case ErrorCode::EmptyRun: return CTXSUGG_ERR_EMPTY_RUN;
        case ErrorCode::NormalizationEmpty: return CTXSUGG_ERR_NORMALIZATION_EMPTY;
        case ErrorCode::InvalidArgument: return CTXSUGG_ERR_INVALID_ARGUMENT;
    }
    return CTXSUGG_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
ctxsugg_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return CTXSUGG_OK;
    } catch (const ctxsugg::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CTXSUGG_ERR_IO;
    }
}

ctxsugg_status invalid(const char* message) {
    t_last_error = message;
    return CTXSUGG_ERR_INVALID_ARGUMENT;
}

ctxsugg::RunOrder run_order(const ctxsugg_run& run) {
    if (!run.ranked) return run.order;
    ctxsugg::RunOrder order;
    for (const auto& list : run.lists) {
        std::vector<std::string> ids;
        ids.reserve(list.entries.size());
        for (const auto& entry : list.entries) ids.push_back(entry.candidate_id);
        order.requests.emplace_back(list.request_id, std::move(ids));
    }
    return order;
}

const char* or_empty(const char* s) {
    return s ? s : "";
}

}  // namespace

extern "C" {

const char* ctxsugg_status_name(ctxsugg_status status) {
    switch (status) {
        case CTXSUGG_OK: return "ok";
        case CTXSUGG_ERR_IO: return "io";
        case CTXSUGG_ERR_PARSE: return "parse";
        case CTXSUGG_ERR_DOMAIN: return "domain";
        case CTXSUGG_ERR_DUPLICATE_ID: return "duplicate-id";
        case CTXSUGG_ERR_UNKNOWN_USER: return "unknown-user";
        case CTXSUGG_ERR_FORMAT: return "format";
        case CTXSUGG_ERR_EMPTY_RUN: return "empty-run";
        case CTXSUGG_ERR_NORMALIZATION_EMPTY: return "normalization-empty";
        case CTXSUGG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    }
    return "?";
}

const char* ctxsugg_last_error(void) {
    return t_last_error.c_str();
}

const char* ctxsugg_algo_name(ctxsugg_algo algo) {
    return ctxsugg::algo_name(static_cast<ctxsugg::Algo>(algo));
}

ctxsugg_status ctxsugg_algo_from_name(const char* name, ctxsugg_algo* out) {
    if (!name || !out) return invalid("null argument");
    return guarded([&] {
        *out = static_cast<ctxsugg_algo>(ctxsugg::algo_from_name(name));
    });
}

ctxsugg_status ctxsugg_lexicon_open(const char* synonyms_path, const char* stopwords_path,
                                    const char* word_classes_path, ctxsugg_lexicon** out) {
    if (!out) return invalid("null output handle");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_lexicon>();
        handle->lexicon = ctxsugg::load_lexicon(or_empty(synonyms_path), or_empty(stopwords_path),
                                                or_empty(word_classes_path));
        *out = handle.release();
    });
}

void ctxsugg_lexicon_free(ctxsugg_lexicon* lexicon) {
    delete lexicon;
}

double ctxsugg_lexicon_word_similarity(const ctxsugg_lexicon* lexicon, const char* a,
                                       const char* b) {
    if (!lexicon || !a || !b) return 0.0;
    return lexicon->lexicon.word_similarity(a, b);
}

ctxsugg_status ctxsugg_tagset_open(const char* path, ctxsugg_tagset** out) {
    if (!path || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_tagset>();
        handle->tags = ctxsugg::load_tagset(path);
        *out = handle.release();
    });
}

void ctxsugg_tagset_free(ctxsugg_tagset* tagset) {
    delete tagset;
}

size_t ctxsugg_tagset_size(const ctxsugg_tagset* tagset) {
    return tagset ? tagset->tags.size() : 0;
}

ctxsugg_status ctxsugg_profiles_open(const char* path, ctxsugg_profiles** out) {
    if (!path || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_profiles>();
        handle->profiles = ctxsugg::load_profiles(path);
        *out = handle.release();
    });
}

void ctxsugg_profiles_free(ctxsugg_profiles* profiles) {
    delete profiles;
}

size_t ctxsugg_profiles_size(const ctxsugg_profiles* profiles) {
    return profiles ? profiles->profiles.size() : 0;
}

ctxsugg_status ctxsugg_profiles_save(const ctxsugg_profiles* profiles, const char* path) {
    if (!profiles || !path) return invalid("null argument");
    return guarded([&] {
        ctxsugg::write_file(path, ctxsugg::serialize_profiles(profiles->profiles));
    });
}

ctxsugg_status ctxsugg_requests_open(const char* path, ctxsugg_requests** out) {
    if (!path || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_requests>();
        handle->requests = ctxsugg::load_requests(path);
        *out = handle.release();
    });
}

void ctxsugg_requests_free(ctxsugg_requests* requests) {
    delete requests;
}

size_t ctxsugg_requests_size(const ctxsugg_requests* requests) {
    return requests ? requests->requests.size() : 0;
}

ctxsugg_status ctxsugg_requests_save(const ctxsugg_requests* requests, const char* path) {
    if (!requests || !path) return invalid("null argument");
    return guarded([&] {
        ctxsugg::write_file(path, ctxsugg::serialize_requests(requests->requests));
    });
}

ctxsugg_status ctxsugg_qrels_open(const char* path, ctxsugg_qrels** out) {
    if (!path || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_qrels>();
        handle->entries = ctxsugg::load_qrels(path);
        *out = handle.release();
    });
}

void ctxsugg_qrels_free(ctxsugg_qrels* qrels) {
    delete qrels;
}

size_t ctxsugg_qrels_size(const ctxsugg_qrels* qrels) {
    return qrels ? qrels->entries.size() : 0;
}

ctxsugg_status ctxsugg_enrich_profiles(ctxsugg_profiles* profiles, const ctxsugg_tagset* tagset,
                                       const ctxsugg_lexicon* lexicon, size_t* newly_tagged) {
    if (!profiles || !tagset || !lexicon) return invalid("null argument");
    return guarded([&] {
        ctxsugg::SimilarityProvider provider(lexicon->lexicon);
        ctxsugg::Enricher enricher(tagset->tags, provider);
        size_t n = ctxsugg::enrich_profiles(profiles->profiles, enricher);
        if (newly_tagged) *newly_tagged = n;
    });
}

ctxsugg_status ctxsugg_enrich_requests(ctxsugg_requests* requests, const ctxsugg_tagset* tagset,
                                       const ctxsugg_lexicon* lexicon, size_t* newly_tagged) {
    if (!requests || !tagset || !lexicon) return invalid("null argument");
    return guarded([&] {
        ctxsugg::SimilarityProvider provider(lexicon->lexicon);
        ctxsugg::Enricher enricher(tagset->tags, provider);
        size_t n = ctxsugg::enrich_requests(requests->requests, enricher);
        if (newly_tagged) *newly_tagged = n;
    });
}

ctxsugg_status ctxsugg_rank(const ctxsugg_profiles* profiles, const ctxsugg_requests* requests,
                            const ctxsugg_lexicon* lexicon, ctxsugg_algo algo, int jobs,
                            ctxsugg_run** out) {
    if (!profiles || !requests || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        static const ctxsugg::Lexicon kEmptyLexicon;
        const ctxsugg::Lexicon& lex = lexicon ? lexicon->lexicon : kEmptyLexicon;
        auto handle = std::make_unique<ctxsugg_run>();
        handle->algo = static_cast<ctxsugg::Algo>(algo);
        handle->lists = ctxsugg::rank_requests(profiles->profiles, requests->requests,
                                               handle->algo, lex, jobs);
        handle->ranked = true;
        *out = handle.release();
    });
}

void ctxsugg_run_free(ctxsugg_run* run) {
    delete run;
}

ctxsugg_status ctxsugg_run_save(const ctxsugg_run* run, const char* run_tag, const char* path) {
    if (!run || !run_tag || !path) return invalid("null argument");
    if (!run->ranked) return invalid("run was parsed from a file, not produced by ranking");
    return guarded([&] {
        ctxsugg::write_file(path, ctxsugg::write_runfile(run->lists, run->algo, run_tag));
    });
}

ctxsugg_status ctxsugg_run_to_string(const ctxsugg_run* run, const char* run_tag, char** out) {
    if (!run || !run_tag || !out) return invalid("null argument");
    if (!run->ranked) return invalid("run was parsed from a file, not produced by ranking");
    *out = nullptr;
    return guarded([&] {
        std::string text = ctxsugg::write_runfile(run->lists, run->algo, run_tag);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

void ctxsugg_string_free(char* s) {
    std::free(s);
}

ctxsugg_status ctxsugg_run_open(const char* path, ctxsugg_run** out) {
    if (!path || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_run>();
        handle->order = ctxsugg::load_runfile(path);
        handle->ranked = false;
        *out = handle.release();
    });
}

ctxsugg_status ctxsugg_evaluate(const ctxsugg_run* run, const ctxsugg_qrels* qrels, int k,
                                int judged_only, ctxsugg_report** out) {
    if (!run || !qrels || !out) return invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<ctxsugg_report>();
        handle->report = ctxsugg::evaluate_run(run_order(*run), qrels->entries, k,
                                               judged_only != 0);
        *out = handle.release();
    });
}

void ctxsugg_report_free(ctxsugg_report* report) {
    delete report;
}

double ctxsugg_report_mean_precision(const ctxsugg_report* report) {
    return report ? report->report.mean_p_at_k : 0.0;
}

double ctxsugg_report_mrr(const ctxsugg_report* report) {
    return report ? report->report.mrr : 0.0;
}

int ctxsugg_report_k(const ctxsugg_report* report) {
    return report ? report->report.k : 0;
}

size_t ctxsugg_report_size(const ctxsugg_report* report) {
    return report ? report->report.per_request.size() : 0;
}

const char* ctxsugg_report_request_id(const ctxsugg_report* report, size_t index) {
    if (!report || index >= report->report.per_request.size()) return "";
    return report->report.per_request[index].request_id.c_str();
}

double ctxsugg_report_precision(const ctxsugg_report* report, size_t index) {
    if (!report || index >= report->report.per_request.size()) return 0.0;
    return report->report.per_request[index].p_at_k;
}

double ctxsugg_report_reciprocal_rank(const ctxsugg_report* report, size_t index) {
    if (!report || index >= report->report.per_request.size()) return 0.0;
    return report->report.per_request[index].reciprocal_rank;
}

int ctxsugg_report_judged(const ctxsugg_report* report, size_t index) {
    if (!report || index >= report->report.per_request.size()) return 0;
    return report->report.per_request[index].judged ? 1 : 0;
}

}  // extern "C"
