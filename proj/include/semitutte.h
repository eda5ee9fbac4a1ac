/*
 * semitutte: exact semimatroid construction, validation, polynomial
 * invariants, activities, and identity verification behind a C ABI.
 *
 * Conventions:
 *   - Every handle from a *_load/*_random call is released with
 *     stt_semimatroid_free; every returned string with stt_string_free.
 *   - Fallible calls return stt_status and write results through out
 *     parameters, which are touched only on meaningful output. When `error`
 *     is non-NULL it receives a heap-allocated diagnostic on failure.
 *   - Handles are immutable after creation, so concurrent calls on distinct
 *     handles (and concurrent reads of one handle) are safe.
 */

#ifndef SEMITUTTE_H
#define SEMITUTTE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stt_semimatroid stt_semimatroid;

typedef enum stt_status {
  STT_OK = 0,
  STT_ERROR_USAGE = 1,    /* bad API usage: NULL handle, unknown name */
  STT_ERROR_PARSE = 2,    /* document text does not parse */
  STT_ERROR_INPUT = 3,    /* parsed but semantically invalid input */
  STT_ERROR_AXIOM = 4,    /* candidate rejected by the axioms */
  STT_ERROR_DOMAIN = 5,   /* operation outside its mathematical domain */
  STT_ERROR_IDENTITY = 6, /* an identity check produced a nonzero difference */
  STT_ERROR_INTERNAL = 7  /* library invariant breached; indicates a bug */
} stt_status;

const char* stt_status_name(stt_status status);
const char* stt_version(void);
void stt_string_free(char* s);

/* Loads an explicit semimatroid document or a hyperplane arrangement
 * document (the kind is detected from the fields). `order_csv` optionally
 * reorders the ground set, e.g. "c,a,b"; NULL keeps the document order. */
stt_status stt_semimatroid_load(const char* document_text, const char* order_csv,
                                stt_semimatroid** out, char** error);

/* Deterministic seeded random arrangement instance. */
stt_status stt_semimatroid_random(uint64_t seed, int n, int dimension,
                                  long bound, stt_semimatroid** out,
                                  char** error);

/* New handle for the same instance with the ground order permuted to
 * `order_csv` (a permutation of the existing labels). */
stt_status stt_semimatroid_reorder(const stt_semimatroid* sm,
                                   const char* order_csv,
                                   stt_semimatroid** out, char** error);

void stt_semimatroid_free(stt_semimatroid* sm);

/* -1 on NULL. */
int stt_semimatroid_size(const stt_semimatroid* sm);
int stt_semimatroid_rank(const stt_semimatroid* sm);

/* Canonical explicit document for the instance. */
stt_status stt_semimatroid_emit(const stt_semimatroid* sm, char** out_json,
                                char** error);

/* poly: z | dichromatic | tutte | characteristic | subset-corank |
 *       size-corank | rank-gen
 * route: sum | dc | activities | viaz | all
 * "all" evaluates every route defined for the polynomial and fails with
 * STT_ERROR_INTERNAL unless they agree term by term. The result is the
 * canonical serialization. */
stt_status stt_invariant(const stt_semimatroid* sm, const char* poly,
                         const char* route, char** out_text, char** error);

/* JSON report: per-basis activity data (fundamental circuits/cocircuits,
 * internally and externally active elements) plus the interval
 * decomposition of the central family. */
stt_status stt_activities(const stt_semimatroid* sm, char** out_json,
                          char** error);

/* Runs one identity (by id) or, with identity_id NULL or empty, the whole
 * battery. out_json receives the full report either way; the status is
 * STT_ERROR_IDENTITY if any checked identity failed. */
stt_status stt_verify(const stt_semimatroid* sm, const char* identity_id,
                      char** out_json, char** error);

/* Newline-separated list of identity ids, multivariate ones marked by a
 * " mv" suffix. */
char* stt_identities(void);

#ifdef __cplusplus
}
#endif

#endif /* SEMITUTTE_H */
