/*
 * C interface to the bounded-weight de Bruijn sequence library.
 *
 * All functions return a bwdb_status; on failure bwdb_last_error() gives a
 * one-line message for the calling thread. Strings handed out through
 * char** parameters are owned by the caller and released with bwdb_free().
 */
#ifndef BWDB_H
#define BWDB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BWDB_BUILDING)
#    define BWDB_API __declspec(dllexport)
#  else
#    define BWDB_API __declspec(dllimport)
#  endif
#else
#  define BWDB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bwdb_status {
    BWDB_OK = 0,
    BWDB_INVALID_ARGUMENT = 1,
    BWDB_CAPACITY_EXCEEDED = 2,
    BWDB_INTERNAL_ERROR = 3
} bwdb_status;

typedef enum bwdb_engine {
    /* colex necklace concatenation; with a seed it runs the h1 successor rule */
    BWDB_ENGINE_GRANDMAMA = 0,
    BWDB_ENGINE_GRANDMAMA_SUCCESSOR = 1,
    BWDB_ENGINE_MSR = 2,
    BWDB_ENGINE_REVERSE_COLEX = 3,
    /* reference successor over a materialized tree (desk scale only) */
    BWDB_ENGINE_GENERIC = 4
} bwdb_engine;

typedef enum bwdb_source {
    BWDB_SOURCE_WORDS = 0,          /* Sigma_t(n,w) directly */
    BWDB_SOURCE_SUBSETS = 1,        /* k-subsets of [n], difference representation */
    BWDB_SOURCE_MULTISETS_FREQ = 2, /* k-multisets of [n], shorthand frequency */
    BWDB_SOURCE_MULTISETS_DIFF = 3  /* k-multisets of [n], difference representation */
} bwdb_source;

typedef struct bwdb_request {
    bwdb_source source;
    bwdb_engine engine;
    uint32_t t; /* BWDB_SOURCE_WORDS */
    uint32_t n;
    uint64_t w;
    uint32_t ground_n; /* object sources */
    uint32_t k;
    const uint32_t* seed; /* optional start window, in output symbols */
    size_t seed_len;
    int allow_small; /* permit k = 1 for multiset sources */
} bwdb_request;

/* Zero-initializes a request (words source, grandmama engine). */
BWDB_API void bwdb_request_init(bwdb_request* req);

BWDB_API const char* bwdb_last_error(void);
BWDB_API const char* bwdb_status_name(bwdb_status status);
BWDB_API void bwdb_free(char* p);

/* ---- streaming generation ---------------------------------------------- */

typedef struct bwdb_generator bwdb_generator;

BWDB_API bwdb_status bwdb_generator_open(const bwdb_request* req, bwdb_generator** out);
/* Writes up to cap symbols; *written == 0 signals the end of the sequence. */
BWDB_API bwdb_status bwdb_generator_read(bwdb_generator* gen, uint32_t* buf, size_t cap,
                                         size_t* written);
/* Number of symbols in the full cycle. */
BWDB_API uint64_t bwdb_generator_length(const bwdb_generator* gen);
/* Output symbols are < this value. */
BWDB_API uint32_t bwdb_generator_alphabet(const bwdb_generator* gen);
/* Underlying bounded-weight parameters; w_effective = min(w, n(t-1)). */
BWDB_API void bwdb_generator_params(const bwdb_generator* gen, uint32_t* t, uint32_t* n,
                                    uint64_t* w, uint64_t* w_effective);
BWDB_API const char* bwdb_generator_engine(const bwdb_generator* gen);
BWDB_API void bwdb_generator_close(bwdb_generator* gen);

/* ---- verification ------------------------------------------------------ */

typedef enum bwdb_against {
    BWDB_AGAINST_WORDS = 0,          /* windows vs Sigma_t(n,w) */
    BWDB_AGAINST_FIXED_WEIGHT = 1,   /* windows + missing symbol vs weight-w words */
    BWDB_AGAINST_SUBSETS = 2,        /* decoded windows vs k-subsets */
    BWDB_AGAINST_MULTISETS_FREQ = 3, /* decoded windows vs k-multisets */
    BWDB_AGAINST_MULTISETS_DIFF = 4
} bwdb_against;

/* Generates the requested cycle and checks it with the brute-force oracle.
 * `list_limit` truncates the missing/duplicated lists (0 keeps all).
 * *ok is set to 1 when the cycle is universal. */
BWDB_API bwdb_status bwdb_verify(const bwdb_request* req, bwdb_against against, uint64_t cap,
                                 size_t list_limit, int* ok, char** report_json);

/* Decodes the window at `position` of the requested cycle as JSON. */
BWDB_API bwdb_status bwdb_decode(const bwdb_request* req, uint64_t position, char** json);

/* Compares two requests symbol for symbol. */
BWDB_API bwdb_status bwdb_compare(const bwdb_request* a, const bwdb_request* b, int* equal,
                                  uint64_t* first_divergence);

/* ---- trees and the reverse-colex comparison ---------------------------- */

typedef enum bwdb_tree_kind { BWDB_TREE_PCR = 0, BWDB_TREE_MSR = 1 } bwdb_tree_kind;
typedef enum bwdb_tree_format { BWDB_TREE_JSON = 0, BWDB_TREE_DOT = 1 } bwdb_tree_format;

BWDB_API bwdb_status bwdb_tree_export(bwdb_tree_kind kind, uint32_t t, uint32_t n, uint64_t w,
                                      bwdb_tree_format format, uint64_t cap, char** out);

/* Compares V_t(n,w) with the reverse-colex concatenation V'_t(n,w). */
BWDB_API bwdb_status bwdb_conjecture_check(uint32_t t, uint32_t n, uint64_t w, int* equal,
                                           char** json);

#ifdef __cplusplus
}
#endif

#endif /* BWDB_H */
