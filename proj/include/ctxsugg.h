/* ctxsugg — contextual-suggestion ranking toolkit, C API.
 *
 * All functions returning ctxsugg_status set a thread-local error message
 * retrievable with ctxsugg_last_error() on failure. Every *_open/*_rank/
 * *_evaluate output handle is owned by the caller and released with the
 * matching *_free function. Handles are immutable after creation except
 * where a function documents otherwise, and may be shared across threads
 * for read-only use.
 */

#ifndef CTXSUGG_H
#define CTXSUGG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctxsugg_status {
    CTXSUGG_OK = 0,
    CTXSUGG_ERR_IO = 1,
    CTXSUGG_ERR_PARSE = 2,
    CTXSUGG_ERR_DOMAIN = 3,
    CTXSUGG_ERR_DUPLICATE_ID = 4,
    CTXSUGG_ERR_UNKNOWN_USER = 5,
    CTXSUGG_ERR_FORMAT = 6,
    CTXSUGG_ERR_EMPTY_RUN = 7,
    CTXSUGG_ERR_NORMALIZATION_EMPTY = 8,
    CTXSUGG_ERR_INVALID_ARGUMENT = 9
} ctxsugg_status;

typedef enum ctxsugg_algo {
    CTXSUGG_ALGO_DREC = 0,
    CTXSUGG_ALGO_COV_REC = 1,
    CTXSUGG_ALGO_CMP_REC = 2,
    CTXSUGG_ALGO_RREC = 3
} ctxsugg_algo;

typedef struct ctxsugg_lexicon ctxsugg_lexicon;
typedef struct ctxsugg_tagset ctxsugg_tagset;
typedef struct ctxsugg_profiles ctxsugg_profiles;
typedef struct ctxsugg_requests ctxsugg_requests;
typedef struct ctxsugg_qrels ctxsugg_qrels;
typedef struct ctxsugg_run ctxsugg_run;
typedef struct ctxsugg_report ctxsugg_report;

const char* ctxsugg_status_name(ctxsugg_status status);

/* Message for the most recent failure on the calling thread; empty string
 * when the last call succeeded. Valid until the next API call on the same
 * thread. */
const char* ctxsugg_last_error(void);

/* "drec", "cov-rec", "cmp-rec", "r-rec". */
const char* ctxsugg_algo_name(ctxsugg_algo algo);
ctxsugg_status ctxsugg_algo_from_name(const char* name, ctxsugg_algo* out);

/* ---- lexicon ------------------------------------------------------------ */

/* Any of the three paths may be NULL or empty; an entirely empty lexicon is
 * valid (exact word matches only, no stopwords). */
ctxsugg_status ctxsugg_lexicon_open(const char* synonyms_path, const char* stopwords_path,
                                    const char* word_classes_path, ctxsugg_lexicon** out);
void ctxsugg_lexicon_free(ctxsugg_lexicon* lexicon);
double ctxsugg_lexicon_word_similarity(const ctxsugg_lexicon* lexicon, const char* a,
                                       const char* b);

/* ---- corpus ------------------------------------------------------------- */

ctxsugg_status ctxsugg_tagset_open(const char* path, ctxsugg_tagset** out);
void ctxsugg_tagset_free(ctxsugg_tagset* tagset);
size_t ctxsugg_tagset_size(const ctxsugg_tagset* tagset);

ctxsugg_status ctxsugg_profiles_open(const char* path, ctxsugg_profiles** out);
void ctxsugg_profiles_free(ctxsugg_profiles* profiles);
size_t ctxsugg_profiles_size(const ctxsugg_profiles* profiles);
ctxsugg_status ctxsugg_profiles_save(const ctxsugg_profiles* profiles, const char* path);

ctxsugg_status ctxsugg_requests_open(const char* path, ctxsugg_requests** out);
void ctxsugg_requests_free(ctxsugg_requests* requests);
size_t ctxsugg_requests_size(const ctxsugg_requests* requests);
ctxsugg_status ctxsugg_requests_save(const ctxsugg_requests* requests, const char* path);

ctxsugg_status ctxsugg_qrels_open(const char* path, ctxsugg_qrels** out);
void ctxsugg_qrels_free(ctxsugg_qrels* qrels);
size_t ctxsugg_qrels_size(const ctxsugg_qrels* qrels);

/* ---- enrichment --------------------------------------------------------- */

/* Mutate the corpus in place, assigning tagset tags to untagged attractions/
 * candidates whose descriptions match. Already tagged records are never
 * touched. newly_tagged (nullable) receives the number of records that
 * gained tags. */
ctxsugg_status ctxsugg_enrich_profiles(ctxsugg_profiles* profiles, const ctxsugg_tagset* tagset,
                                       const ctxsugg_lexicon* lexicon, size_t* newly_tagged);
ctxsugg_status ctxsugg_enrich_requests(ctxsugg_requests* requests, const ctxsugg_tagset* tagset,
                                       const ctxsugg_lexicon* lexicon, size_t* newly_tagged);

/* ---- ranking ------------------------------------------------------------ */

/* Ranks every request against its user's profile. lexicon may be NULL (exact
 * word matching, no stopword filtering). jobs < 2 means sequential; output is
 * deterministic and independent of jobs. */
ctxsugg_status ctxsugg_rank(const ctxsugg_profiles* profiles, const ctxsugg_requests* requests,
                            const ctxsugg_lexicon* lexicon, ctxsugg_algo algo, int jobs,
                            ctxsugg_run** out);
void ctxsugg_run_free(ctxsugg_run* run);

/* TREC run-file emission: "<request_id> Q0 <candidate_id> <rank> <score>
 * <run_tag>", scores with 6 decimals, trailing newline. */
ctxsugg_status ctxsugg_run_save(const ctxsugg_run* run, const char* run_tag, const char* path);
/* As above but into a heap string released with ctxsugg_string_free. */
ctxsugg_status ctxsugg_run_to_string(const ctxsugg_run* run, const char* run_tag, char** out);
void ctxsugg_string_free(char* s);

/* Parses a previously written run file (for evaluation). */
ctxsugg_status ctxsugg_run_open(const char* path, ctxsugg_run** out);

/* ---- evaluation --------------------------------------------------------- */

/* P@k / MRR against qrels; relevant means rated 3 or 4. judged_only != 0
 * excludes requests without judgments from the means (they are still
 * reported). */
ctxsugg_status ctxsugg_evaluate(const ctxsugg_run* run, const ctxsugg_qrels* qrels, int k,
                                int judged_only, ctxsugg_report** out);
void ctxsugg_report_free(ctxsugg_report* report);

double ctxsugg_report_mean_precision(const ctxsugg_report* report);
double ctxsugg_report_mrr(const ctxsugg_report* report);
int ctxsugg_report_k(const ctxsugg_report* report);
size_t ctxsugg_report_size(const ctxsugg_report* report);
/* Per-request accessors; index must be < ctxsugg_report_size(). The returned
 * string stays valid for the report's lifetime. */
const char* ctxsugg_report_request_id(const ctxsugg_report* report, size_t index);
double ctxsugg_report_precision(const ctxsugg_report* report, size_t index);
double ctxsugg_report_reciprocal_rank(const ctxsugg_report* report, size_t index);
int ctxsugg_report_judged(const ctxsugg_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* CTXSUGG_H */
