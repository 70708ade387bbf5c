/* C interface to the n-Lie algebra library.
 *
 * Algebras and subspaces are opaque handles. Every call that can fail
 * returns an nlie_status; on failure nlie_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** out-parameters belong to the caller and
 * are released with nlie_string_free.
 *
 * Report functions return JSON text with "schema": "nlie-report-v1" and a
 * "verb" key naming the operation. Keys are emitted in a fixed order and
 * the output for a given input is byte-identical across runs.
 */
#ifndef NLIE_NLIE_H
#define NLIE_NLIE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NLIE_API __declspec(dllexport)
#else
#define NLIE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlie_status {
  NLIE_OK = 0,
  NLIE_ERR_PARSE = 1,
  NLIE_ERR_INVALID_ARGUMENT = 2,
  NLIE_ERR_FIELD_MISMATCH = 3,
  NLIE_ERR_DIMENSION_MISMATCH = 4,
  NLIE_ERR_NOT_AN_IDEAL = 5,
  NLIE_ERR_FI_VIOLATION = 6,
  NLIE_ERR_BUDGET_EXCEEDED = 7,
  NLIE_ERR_UNSUPPORTED = 8,
  NLIE_ERR_INTERNAL = 9
} nlie_status;

typedef struct nlie_algebra nlie_algebra;
typedef struct nlie_subspace nlie_subspace;

NLIE_API const char* nlie_version(void);
NLIE_API const char* nlie_last_error(void);
NLIE_API const char* nlie_status_name(nlie_status status);
NLIE_API void nlie_string_free(char* s);

/* nlie-v1 documents */
NLIE_API nlie_status nlie_algebra_parse(const char* text, nlie_algebra** out);
NLIE_API nlie_status nlie_algebra_serialize(const nlie_algebra* l, char** out);
NLIE_API void nlie_algebra_free(nlie_algebra* l);
NLIE_API int nlie_algebra_arity(const nlie_algebra* l);
NLIE_API int nlie_algebra_dim(const nlie_algebra* l);
/* 0 over Q, else the prime. */
NLIE_API uint32_t nlie_algebra_characteristic(const nlie_algebra* l);

/* nlie-subspace-v1 sidecar, read over the algebra's field. */
NLIE_API nlie_status nlie_subspace_parse(const nlie_algebra* l, const char* text,
                                         nlie_subspace** out);
NLIE_API void nlie_subspace_free(nlie_subspace* s);

/* Reports */
NLIE_API nlie_status nlie_check(const nlie_algebra* l, unsigned threads, char** report);
NLIE_API nlie_status nlie_report(const nlie_algebra* l, char** report);
NLIE_API nlie_status nlie_center(const nlie_algebra* l, char** report);
/* steps < 0: until the series stabilizes. */
NLIE_API nlie_status nlie_derived(const nlie_algebra* l, int s, int steps, char** report);
NLIE_API nlie_status nlie_classify(const nlie_algebra* l, const nlie_subspace* s, char** report);

typedef struct nlie_alphabeta_options {
  const uint32_t* primes; /* exhaustive search mod each prime; may be NULL */
  size_t prime_count;
  int q_bounds;           /* nonzero: greedy lower and universal upper bounds */
  uint64_t budget;        /* subspaces tested per prime; 0 = default */
  unsigned threads;
} nlie_alphabeta_options;

/* Over Q an exact answer needs primes or q_bounds; otherwise
 * NLIE_ERR_UNSUPPORTED. */
NLIE_API nlie_status nlie_alphabeta(const nlie_algebra* l, const nlie_alphabeta_options* options,
                                    char** report);
NLIE_API nlie_status nlie_fingerprint(const nlie_algebra* l, char** report);
/* p = 0: search over the algebras' own field. */
NLIE_API nlie_status nlie_iso(const nlie_algebra* a, const nlie_algebra* b, uint64_t budget,
                              uint32_t p, char** report);
/* p = 0: default prime for Q inputs. */
NLIE_API nlie_status nlie_classify44(const nlie_algebra* l, uint32_t p, uint64_t budget,
                                     unsigned threads, char** report);

/* Constructions. w is a comma-separated coordinate list. */
NLIE_API nlie_status nlie_assoc_lie(const nlie_algebra* l, const char* w, nlie_algebra** out);
NLIE_API nlie_status nlie_extend(const nlie_algebra* lie, nlie_algebra** out);
NLIE_API nlie_status nlie_direct_sum(const nlie_algebra* a, const nlie_algebra* b,
                                     nlie_algebra** out);

/* Catalog. params_json is an object with any of
 *   "dim", "n", "r", "t", "size" (integers), "alpha" (scalar text),
 *   "field" ("Q" or {"p": P}),
 *   "action" ([{"i":1,"j":2,"k":1,"value":["0","1"]}, ...]).
 * unchecked != 0 skips the identity check. */
NLIE_API nlie_status nlie_catalog_list(char** report);
NLIE_API nlie_status nlie_catalog_build(const char* id, const char* params_json, int unchecked,
                                        nlie_algebra** out);

/* Regression suite. criteria = NULL runs all of them. */
NLIE_API nlie_status nlie_verify_suite(const int* criteria, size_t count, unsigned threads,
                                       uint64_t seed, char** report);

#ifdef __cplusplus
}
#endif

#endif
