/* chebmat C API: exact Chebyshev evaluation on adjacency matrices of Dynkin,
 * extended Dynkin and loop-type diagrams, with periodicity / linear-growth
 * certificates, finite-tame-wild classification and projective-resolution
 * traces.
 *
 * All functions return a chebmat_status; results come back through out
 * parameters. Matrices are opaque handles; structured results are UTF-8 JSON
 * strings. Strings and matrices returned by the library must be released
 * with chebmat_string_free / chebmat_matrix_free. chebmat_last_error gives a
 * human-readable message for the most recent failure on this thread.
 */
#ifndef CHEBMAT_H
#define CHEBMAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chebmat_status {
    CHEBMAT_OK = 0,
    CHEBMAT_ERR_INVALID = 1,      /* bad arguments, dimension or validation failure */
    CHEBMAT_ERR_PARSE = 2,        /* malformed matrix file / JSON */
    CHEBMAT_ERR_RANGE = 3,        /* index outside an operation's validity window */
    CHEBMAT_ERR_HYPOTHESIS = 4,   /* structural hypothesis or model violation */
    CHEBMAT_ERR_UNSUPPORTED = 5,  /* operation undefined for this family / kind */
    CHEBMAT_ERR_NOT_FOUND = 6,    /* bounded search exhausted */
    CHEBMAT_ERR_INTERNAL = 7
} chebmat_status;

typedef struct chebmat_matrix chebmat_matrix;

const char* chebmat_version(void);

/* Message for the most recent error on the calling thread ("" if none). */
const char* chebmat_last_error(void);

void chebmat_matrix_free(chebmat_matrix* m);
void chebmat_string_free(char* s);

/* Matrix construction.
 * JSON schema: {"n": <int>, "rows": [[...], ...]}, entries as numbers or
 * decimal strings. */
chebmat_status chebmat_matrix_parse_json(const char* text, chebmat_matrix** out);
chebmat_status chebmat_matrix_from_rows64(int n, const int64_t* row_major, chebmat_matrix** out);

/* Adjacency matrix of a labeled diagram. Family names: A, D, E6, E7, E8, L,
 * Atilde, Dtilde, E6tilde, E7tilde, E8tilde, Ltilde, DLtilde (case
 * insensitive). index <= 0 selects the canonical index of the fixed-size
 * families. */
chebmat_status chebmat_diagram_adjacency(const char* family, int index, chebmat_matrix** out);

chebmat_status chebmat_matrix_dim(const chebmat_matrix* m, int* out);
chebmat_status chebmat_matrix_to_json(const chebmat_matrix* m, char** out);
/* Decimal rendering of one entry (0-based indices). */
chebmat_status chebmat_matrix_entry_decimal(const chebmat_matrix* m, int i, int j, char** out);

/* f_k of the matrix under the second-kind Chebyshev recurrence, k >= -1. */
chebmat_status chebmat_cheb_eval(const chebmat_matrix* x, long k, chebmat_matrix** out);

/* JSON payloads for the analysis commands. k_max <= 0 selects the default
 * scan bound. See README for payload schemas. */
chebmat_status chebmat_eval_json(const chebmat_matrix* x, long k, char** out);
chebmat_status chebmat_period_json(const chebmat_matrix* x, long k_max, char** out);
chebmat_status chebmat_growth_json(const chebmat_matrix* x, long k_max, char** out);
chebmat_status chebmat_classify_json(const chebmat_matrix* x, long k_max, char** out);
chebmat_status chebmat_identify_json(const chebmat_matrix* x, char** out);
chebmat_status chebmat_resolve_json(const char* family, int index, int simple_index, long steps,
                                    char** out);

#ifdef __cplusplus
}
#endif

#endif /* CHEBMAT_H */
