// ctxsugg command-line front end. Talks to the core exclusively through the
// C API in ctxsugg.h; exit codes: 0 success, 2 usage/input error, 3 data
// error, 4 referential error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctxsugg.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitReferential = 4;

int exit_code_for(ctxsugg_status status) {
    switch (status) {
        case CTXSUGG_OK: return kExitOk;
        case CTXSUGG_ERR_IO:
        case CTXSUGG_ERR_INVALID_ARGUMENT: return kExitUsage;
        case CTXSUGG_ERR_UNKNOWN_USER: return kExitReferential;
        default: return kExitData;
    }
}

struct CliError {
    int code;
};

// Prints the library's error message and converts the status to an exit code.
void check(ctxsugg_status status, const char* stage) {
    if (status == CTXSUGG_OK) return;
    std::fprintf(stderr, "ctxsugg: %s: %s\n", stage, ctxsugg_last_error());
    throw CliError{exit_code_for(status)};
}

template <auto Free>
struct FnDeleter {
    template <typename T>
    void operator()(T* p) const {
        Free(p);
    }
};
template <typename T, auto Free>
using Handle = std::unique_ptr<T, FnDeleter<Free>>;

using LexiconHandle = Handle<ctxsugg_lexicon, ctxsugg_lexicon_free>;
using TagsetHandle = Handle<ctxsugg_tagset, ctxsugg_tagset_free>;
using ProfilesHandle = Handle<ctxsugg_profiles, ctxsugg_profiles_free>;
using RequestsHandle = Handle<ctxsugg_requests, ctxsugg_requests_free>;
using QrelsHandle = Handle<ctxsugg_qrels, ctxsugg_qrels_free>;
using RunHandle = Handle<ctxsugg_run, ctxsugg_run_free>;
using ReportHandle = Handle<ctxsugg_report, ctxsugg_report_free>;

struct CommonOpts {
    std::string profiles;
    std::string requests;
    std::string tagset;
    std::string lexicon;
    std::string stopwords;
    std::string word_classes;
    int jobs = 1;
};

LexiconHandle open_lexicon(const CommonOpts& opts, const char* stage) {
    ctxsugg_lexicon* raw = nullptr;
    check(ctxsugg_lexicon_open(opts.lexicon.empty() ? nullptr : opts.lexicon.c_str(),
                               opts.stopwords.empty() ? nullptr : opts.stopwords.c_str(),
                               opts.word_classes.empty() ? nullptr : opts.word_classes.c_str(),
                               &raw),
          stage);
    return LexiconHandle(raw);
}

TagsetHandle open_tagset(const std::string& path, const char* stage) {
    ctxsugg_tagset* raw = nullptr;
    check(ctxsugg_tagset_open(path.c_str(), &raw), stage);
    return TagsetHandle(raw);
}

ProfilesHandle open_profiles(const std::string& path, const char* stage) {
    ctxsugg_profiles* raw = nullptr;
    check(ctxsugg_profiles_open(path.c_str(), &raw), stage);
    return ProfilesHandle(raw);
}

RequestsHandle open_requests(const std::string& path, const char* stage) {
    ctxsugg_requests* raw = nullptr;
    check(ctxsugg_requests_open(path.c_str(), &raw), stage);
    return RequestsHandle(raw);
}

QrelsHandle open_qrels(const std::string& path, const char* stage) {
    ctxsugg_qrels* raw = nullptr;
    check(ctxsugg_qrels_open(path.c_str(), &raw), stage);
    return QrelsHandle(raw);
}

bool has_whitespace(const std::string& s) {
    return s.find_first_of(" \t\r\n\v\f") != std::string::npos;
}

std::vector<ctxsugg_algo> parse_algos(const std::string& name, const char* stage) {
    if (name == "all") {
        return {CTXSUGG_ALGO_DREC, CTXSUGG_ALGO_COV_REC, CTXSUGG_ALGO_CMP_REC, CTXSUGG_ALGO_RREC};
    }
    ctxsugg_algo algo;
    check(ctxsugg_algo_from_name(name.c_str(), &algo), stage);
    return {algo};
}

// toy.run + cov-rec -> toy-cov-rec.run (used with --algo all).
std::string suffixed_path(const std::string& out, const char* algo) {
    fs::path p(out);
    fs::path stem = p.stem();
    fs::path ext = p.extension();
    p.replace_filename(stem.string() + "-" + algo + ext.string());
    return p.string();
}

std::string run_tag_for(const std::string& explicit_tag, const char* algo, bool multi) {
    if (explicit_tag.empty()) return std::string("ctxsugg-") + algo;
    if (multi) return explicit_tag + "-" + algo;
    return explicit_tag;
}

void print_report(const ctxsugg_report* report, bool per_request) {
    for (size_t i = 0; i < ctxsugg_report_size(report); ++i) {
        if (!ctxsugg_report_judged(report, i)) {
            std::fprintf(stderr, "ctxsugg: warning: request %s has no relevance judgments\n",
                         ctxsugg_report_request_id(report, i));
        }
        if (per_request) {
            std::printf("%s\t%.4f\t%.4f\n", ctxsugg_report_request_id(report, i),
                        ctxsugg_report_precision(report, i),
                        ctxsugg_report_reciprocal_rank(report, i));
        }
    }
    std::printf("P@%d\t%.4f\n", ctxsugg_report_k(report), ctxsugg_report_mean_precision(report));
    std::printf("MRR\t%.4f\n", ctxsugg_report_mrr(report));
}

struct EnrichArgs {
    CommonOpts common;
    std::string out;
};

int cmd_enrich(const EnrichArgs& args) {
    auto lexicon = open_lexicon(args.common, "enrich");
    auto tagset = open_tagset(args.common.tagset, "enrich");
    auto profiles = open_profiles(args.common.profiles, "enrich");

    std::error_code ec;
    fs::create_directories(args.out, ec);
    if (ec) {
        std::fprintf(stderr, "ctxsugg: enrich: cannot create output directory %s\n",
                     args.out.c_str());
        return kExitUsage;
    }

    size_t tagged_attractions = 0;
    check(ctxsugg_enrich_profiles(profiles.get(), tagset.get(), lexicon.get(),
                                  &tagged_attractions),
          "enrich");
    fs::path profiles_out = fs::path(args.out) / fs::path(args.common.profiles).filename();
    check(ctxsugg_profiles_save(profiles.get(), profiles_out.string().c_str()), "enrich");
    std::printf("newly tagged attractions\t%zu\n", tagged_attractions);

    if (!args.common.requests.empty()) {
        auto requests = open_requests(args.common.requests, "enrich");
        size_t tagged_candidates = 0;
        check(ctxsugg_enrich_requests(requests.get(), tagset.get(), lexicon.get(),
                                      &tagged_candidates),
              "enrich");
        fs::path requests_out = fs::path(args.out) / fs::path(args.common.requests).filename();
        check(ctxsugg_requests_save(requests.get(), requests_out.string().c_str()), "enrich");
        std::printf("newly tagged candidates\t%zu\n", tagged_candidates);
    }
    return kExitOk;
}

struct RankArgs {
    CommonOpts common;
    std::string algo = "r-rec";
    std::string run_tag;
    std::string out;
    bool enrich = false;
};

int rank_and_save(const RankArgs& args, ctxsugg_profiles* profiles, ctxsugg_requests* requests,
                  const ctxsugg_lexicon* lexicon, const char* stage) {
    auto algos = parse_algos(args.algo, stage);
    bool multi = algos.size() > 1;
    for (ctxsugg_algo algo : algos) {
        const char* name = ctxsugg_algo_name(algo);
        ctxsugg_run* raw = nullptr;
        check(ctxsugg_rank(profiles, requests, lexicon, algo, args.common.jobs, &raw), stage);
        RunHandle run(raw);
        std::string path = multi ? suffixed_path(args.out, name) : args.out;
        std::string tag = run_tag_for(args.run_tag, name, multi);
        check(ctxsugg_run_save(run.get(), tag.c_str(), path.c_str()), stage);
    }
    return kExitOk;
}

int cmd_rank(const RankArgs& args) {
    auto lexicon = open_lexicon(args.common, "rank");
    auto profiles = open_profiles(args.common.profiles, "rank");
    auto requests = open_requests(args.common.requests, "rank");
    if (args.enrich) {
        auto tagset = open_tagset(args.common.tagset, "rank");
        check(ctxsugg_enrich_profiles(profiles.get(), tagset.get(), lexicon.get(), nullptr),
              "rank");
        check(ctxsugg_enrich_requests(requests.get(), tagset.get(), lexicon.get(), nullptr),
              "rank");
    }
    return rank_and_save(args, profiles.get(), requests.get(), lexicon.get(), "rank");
}

struct EvalArgs {
    std::string run;
    std::string qrels;
    int k = 5;
    bool judged_only = false;
    bool per_request = false;
};

int cmd_eval(const EvalArgs& args) {
    ctxsugg_run* raw_run = nullptr;
    check(ctxsugg_run_open(args.run.c_str(), &raw_run), "eval");
    RunHandle run(raw_run);
    auto qrels = open_qrels(args.qrels, "eval");
    ctxsugg_report* raw_report = nullptr;
    check(ctxsugg_evaluate(run.get(), qrels.get(), args.k, args.judged_only ? 1 : 0, &raw_report),
          "eval");
    ReportHandle report(raw_report);
    print_report(report.get(), args.per_request);
    return kExitOk;
}

struct PipelineArgs {
    RankArgs rank;
    std::string qrels;
    int k = 5;
    bool judged_only = false;
    bool per_request = false;
};

int cmd_pipeline(const PipelineArgs& args) {
    auto lexicon = open_lexicon(args.rank.common, "pipeline/enrich");
    auto tagset = open_tagset(args.rank.common.tagset, "pipeline/enrich");
    auto profiles = open_profiles(args.rank.common.profiles, "pipeline/enrich");
    auto requests = open_requests(args.rank.common.requests, "pipeline/enrich");
    check(ctxsugg_enrich_profiles(profiles.get(), tagset.get(), lexicon.get(), nullptr),
          "pipeline/enrich");
    check(ctxsugg_enrich_requests(requests.get(), tagset.get(), lexicon.get(), nullptr),
          "pipeline/enrich");

    int code = rank_and_save(args.rank, profiles.get(), requests.get(), lexicon.get(),
                             "pipeline/rank");
    if (code != kExitOk || args.qrels.empty()) return code;

    auto algos = parse_algos(args.rank.algo, "pipeline/eval");
    bool multi = algos.size() > 1;
    auto qrels = open_qrels(args.qrels, "pipeline/eval");
    for (ctxsugg_algo algo : algos) {
        const char* name = ctxsugg_algo_name(algo);
        std::string path = multi ? suffixed_path(args.rank.out, name) : args.rank.out;
        ctxsugg_run* raw_run = nullptr;
        check(ctxsugg_run_open(path.c_str(), &raw_run), "pipeline/eval");
        RunHandle run(raw_run);
        ctxsugg_report* raw_report = nullptr;
        check(ctxsugg_evaluate(run.get(), qrels.get(), args.k, args.judged_only ? 1 : 0,
                               &raw_report),
              "pipeline/eval");
        ReportHandle report(raw_report);
        if (multi) std::printf("algo\t%s\n", name);
        print_report(report.get(), args.per_request);
    }
    return kExitOk;
}

void add_lexicon_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--lexicon", opts.lexicon, "synonym lexicon TSV")->envname("CTXSUGG_LEXICON");
    cmd->add_option("--stopwords", opts.stopwords, "stopword list, one word per line");
    cmd->add_option("--word-classes", opts.word_classes, "word-class TSV (N/ADJ/PREP/O)");
}

void add_config_flag(CLI::App* cmd) {
    cmd->set_config("--config", "", "read options from a config file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rule-based contextual suggestion toolkit"};
    app.require_subcommand(1);

    EnrichArgs enrich_args;
    auto* enrich = app.add_subcommand(
        "enrich", "assign tags to untagged attractions and candidates");
    add_config_flag(enrich);
    enrich->add_option("--profiles", enrich_args.common.profiles, "profiles file")->required();
    enrich->add_option("--requests", enrich_args.common.requests, "requests file");
    enrich->add_option("--tagset", enrich_args.common.tagset, "tagset file")
        ->required()
        ->envname("CTXSUGG_TAGSET");
    add_lexicon_flags(enrich, enrich_args.common);
    enrich->add_option("--out", enrich_args.out, "output directory for enriched files")
        ->required();

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "rank candidate pools into a TREC run file");
    add_config_flag(rank);
    rank->add_option("--algo", rank_args.algo, "drec, cov-rec, cmp-rec, r-rec or all")
        ->required();
    rank->add_option("--profiles", rank_args.common.profiles, "profiles file")->required();
    rank->add_option("--requests", rank_args.common.requests, "requests file")->required();
    rank->add_option("--tagset", rank_args.common.tagset, "tagset file (with --enrich)")
        ->envname("CTXSUGG_TAGSET");
    add_lexicon_flags(rank, rank_args.common);
    rank->add_flag("--enrich", rank_args.enrich, "enrich profiles and candidates before ranking");
    rank->add_option("--run-tag", rank_args.run_tag, "run tag (default ctxsugg-<algo>)");
    rank->add_option("--jobs", rank_args.common.jobs, "parallel ranking workers")
        ->envname("CTXSUGG_JOBS");
    rank->add_option("--out", rank_args.out, "run file path")->required();

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "score a run file against qrels (P@k, MRR)");
    add_config_flag(eval);
    eval->add_option("--run", eval_args.run, "run file")->required();
    eval->add_option("--qrels", eval_args.qrels, "qrels file")->required();
    eval->add_option("--k", eval_args.k, "precision cutoff")->check(CLI::PositiveNumber);
    eval->add_flag("--judged-only", eval_args.judged_only,
                   "average only over requests with judgments");
    eval->add_flag("--per-request", eval_args.per_request, "print per-request metrics");

    PipelineArgs pipe_args;
    auto* pipe = app.add_subcommand("pipeline", "enrich, rank and evaluate in one pass");
    add_config_flag(pipe);
    pipe->add_option("--algo", pipe_args.rank.algo, "drec, cov-rec, cmp-rec, r-rec or all")
        ->required();
    pipe->add_option("--profiles", pipe_args.rank.common.profiles, "profiles file")->required();
    pipe->add_option("--requests", pipe_args.rank.common.requests, "requests file")->required();
    pipe->add_option("--tagset", pipe_args.rank.common.tagset, "tagset file")
        ->required()
        ->envname("CTXSUGG_TAGSET");
    add_lexicon_flags(pipe, pipe_args.rank.common);
    pipe->add_option("--qrels", pipe_args.qrels, "qrels file (enables evaluation)");
    pipe->add_option("--k", pipe_args.k, "precision cutoff")->check(CLI::PositiveNumber);
    pipe->add_flag("--judged-only", pipe_args.judged_only,
                   "average only over requests with judgments");
    pipe->add_flag("--per-request", pipe_args.per_request, "print per-request metrics");
    pipe->add_option("--run-tag", pipe_args.rank.run_tag, "run tag (default ctxsugg-<algo>)");
    pipe->add_option("--jobs", pipe_args.rank.common.jobs, "parallel ranking workers")
        ->envname("CTXSUGG_JOBS");
    pipe->add_option("--out", pipe_args.rank.out, "run file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    // Validated here so a bad tag is a usage error, not a data error.
    for (const std::string* tag : {&rank_args.run_tag, &pipe_args.rank.run_tag}) {
        if (!tag->empty() && has_whitespace(*tag)) {
            std::fprintf(stderr, "ctxsugg: run tag must not contain whitespace\n");
            return kExitUsage;
        }
    }

    try {
        if (enrich->parsed()) return cmd_enrich(enrich_args);
        if (rank->parsed()) return cmd_rank(rank_args);
        if (eval->parsed()) return cmd_eval(eval_args);
        if (pipe->parsed()) return cmd_pipeline(pipe_args);
    } catch (const CliError& e) {
        return e.code;
    }
    return kExitUsage;
}
