/*
 * ontoboot - C API for the ontology bootstrapping toolkit.
 *
 * The library turns a directory of WSDL descriptors plus a directory of
 * context text documents into a concept/relation ontology and a service
 * registry, then answers concept-aware, visit-adaptive ranking queries.
 *
 * All functions return ONTO_OK on success; on failure onto_last_error()
 * holds a message for the calling thread. Handles are opaque and must be
 * released with onto_close(); strings and hit arrays returned by the
 * library must be released with onto_string_free() / onto_hits_free().
 */

#ifndef ONTOBOOT_H
#define ONTOBOOT_H

#include <stddef.h>

#if defined(_WIN32)
#define ONTO_API __declspec(dllexport)
#else
#define ONTO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum onto_status {
    ONTO_OK = 0,
    ONTO_E_USAGE = 1,     /* bad arguments or configuration */
    ONTO_E_IO = 2,        /* unreadable/unwritable files */
    ONTO_E_DATA = 3,      /* malformed corpus or persisted artifact */
    ONTO_E_NOT_FOUND = 4, /* unknown service id */
    ONTO_E_INTERNAL = 5
} onto_status;

/* Opaque engine: ontology + registry + the directory they persist in. */
typedef struct onto_engine onto_engine;

typedef struct onto_params {
    long tfidf_k;             /* top descriptors per service (default 10) */
    double tfidf_min_weight;  /* strictly-greater-than cutoff (default 0) */
    long context_n;           /* search results per query (default 10) */
    long context_j;           /* descriptors per result (default 10) */
    long context_m;           /* descriptors per context (default 10) */
    double context_theta;     /* Jaccard clustering threshold (default 0.3) */
    double rank_alpha;        /* concept overlap weight (default 0.5) */
    double rank_beta;         /* text similarity weight (default 0.3) */
    double rank_gamma;        /* visit priority weight (default 0.2) */
    long rank_top_k;          /* default result count (default 10) */
    int stem_plurals;         /* 1 = strip plural 's' while tokenizing */
    int stopwords_replace;    /* 1 = stopwords_path replaces the builtin list */
    const char* stopwords_path; /* NULL = builtin list */
    const char* order;          /* debug: "asc" (default), "desc", "shuffle:<seed>" */
} onto_params;

/* Fills *params with the documented defaults. */
ONTO_API void onto_params_init(onto_params* params);

/*
 * Merges a TOML config file into *params. The [paths] entries come back
 * through the char** slots (malloc'd, free with onto_string_free; NULL slots
 * are skipped; slots for keys absent from the file are left untouched).
 * params->stopwords_path is never rewritten by this call: wire the returned
 * stopwords_file string in yourself before bootstrapping.
 */
ONTO_API onto_status onto_load_config(const char* path, onto_params* params,
                                      char** wsdl_dir, char** context_dir,
                                      char** stopwords_file, char** output_dir);

/*
 * Runs the full bootstrap over wsdl_dir/context_dir, writes ontology.json,
 * registry.json and report.json into output_dir, and returns a live engine.
 * params may be NULL for all defaults.
 */
ONTO_API onto_status onto_bootstrap(const char* wsdl_dir, const char* context_dir,
                                    const char* output_dir, const onto_params* params,
                                    onto_engine** out);

/* Opens a previously bootstrapped output directory. */
ONTO_API onto_status onto_open(const char* output_dir, onto_engine** out);

ONTO_API void onto_close(onto_engine* engine);

typedef struct onto_hit {
    char* service_id;
    double score;
    double concept_score;
    double text_score;
    double priority_score;
} onto_hit;

/*
 * Ranks services against the query terms. top_k <= 0 means the registry
 * default. The terms are tokenized and stop-word filtered with the same
 * rules as the corpus; a query that filters to nothing is ONTO_E_USAGE.
 */
ONTO_API onto_status onto_query(onto_engine* engine, const char* const* terms,
                                size_t n_terms, long top_k, onto_hit** hits,
                                size_t* n_hits);

ONTO_API void onto_hits_free(onto_hit* hits, size_t n_hits);

/* Increments the visit counter and rewrites registry.json atomically. */
ONTO_API onto_status onto_visit(onto_engine* engine, const char* service_id);

/* Canonical ontology JSON (byte-identical to ontology.json). */
ONTO_API onto_status onto_export_ontology(onto_engine* engine, char** json);

/* Corpus and ontology summary as JSON. */
ONTO_API onto_status onto_stats(onto_engine* engine, char** json);

ONTO_API void onto_string_free(char* s);

/* Message for the last failing call on this thread ("" if none). */
ONTO_API const char* onto_last_error(void);

ONTO_API const char* onto_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ONTOBOOT_H */
