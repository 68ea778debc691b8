/* C interface to the tucker library.
 *
 * Every fallible call returns a tucker_status; on failure the message is
 * available from tucker_last_error() on the calling thread until the next
 * call. Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function. Strings returned through
 * char** are released with tucker_string_free. */
#ifndef TUCKER_TUCKER_H
#define TUCKER_TUCKER_H

#include <stddef.h>
#include <stdint.h>

#if defined(TUCKER_BUILDING_LIBRARY)
#define TUCKER_API __attribute__((visibility("default")))
#else
#define TUCKER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tucker_matrix tucker_matrix;
typedef struct tucker_witness tucker_witness;

typedef enum tucker_status {
  TUCKER_OK = 0,
  TUCKER_ERR_PARSE = 1,
  TUCKER_ERR_IO = 2,
  TUCKER_ERR_INVALID_ARGUMENT = 3,
  TUCKER_ERR_BOUND_EXCEEDED = 4,
  TUCKER_ERR_UNSUPPORTED = 5,
  TUCKER_ERR_INTERNAL = 6,
  TUCKER_ERR_OUT_OF_MEMORY = 7
} tucker_status;

typedef enum tucker_format { TUCKER_FORMAT_DENSE = 0, TUCKER_FORMAT_SPARSE = 1 } tucker_format;

typedef enum tucker_kind {
  TUCKER_KIND_I = 1,
  TUCKER_KIND_II = 2,
  TUCKER_KIND_III = 3,
  TUCKER_KIND_IV = 4,
  TUCKER_KIND_V = 5
} tucker_kind;

typedef enum tucker_mode { TUCKER_MODE_CONDITIONAL = 0, TUCKER_MODE_EXACT = 1 } tucker_mode;

typedef enum tucker_outcome { TUCKER_FOUND = 0, TUCKER_NOT_FOUND = 1, TUCKER_SUPERSEDED = 2 } tucker_outcome;

typedef struct tucker_options {
  int workers;      /* <= 1 runs sequentially; results never depend on it */
  tucker_mode mode; /* detectors used by the global search */
} tucker_options;

typedef struct tucker_oracle_bounds {
  size_t max_cols; /* permutation search, default 9 */
  size_t max_dim;  /* subset enumeration, default 7 */
} tucker_oracle_bounds;

/* Bit (1 << kind) of a kind mask. */
#define TUCKER_KIND_BIT(kind) (1u << (unsigned)(kind))

TUCKER_API const char* tucker_version(void);
TUCKER_API const char* tucker_last_error(void);
TUCKER_API const char* tucker_status_name(tucker_status status);
TUCKER_API void tucker_string_free(char* s);
TUCKER_API tucker_options tucker_default_options(void);
TUCKER_API tucker_oracle_bounds tucker_default_oracle_bounds(void);

/* Matrices */
TUCKER_API tucker_status tucker_matrix_parse(const char* text, size_t length, tucker_format format,
                                             tucker_matrix** out);
TUCKER_API tucker_status tucker_matrix_load(const char* path, tucker_format format, tucker_matrix** out);
TUCKER_API tucker_status tucker_matrix_create(size_t rows, size_t cols, tucker_matrix** out);
TUCKER_API tucker_status tucker_matrix_random(size_t rows, size_t cols, double density, uint64_t seed,
                                              tucker_matrix** out);
TUCKER_API tucker_status tucker_matrix_pattern(tucker_kind kind, int k, tucker_matrix** out);
/* Pattern placed among interval rows and shuffled; the planted rows and
 * columns are available as a witness when planted != NULL. */
TUCKER_API tucker_status tucker_matrix_planted(tucker_kind kind, int k, size_t rows, size_t cols, uint64_t seed,
                                               tucker_matrix** out, tucker_witness** planted);
TUCKER_API void tucker_matrix_free(tucker_matrix* m);

TUCKER_API size_t tucker_matrix_rows(const tucker_matrix* m);
TUCKER_API size_t tucker_matrix_cols(const tucker_matrix* m);
TUCKER_API tucker_status tucker_matrix_get(const tucker_matrix* m, size_t row, size_t col, int* value);
TUCKER_API tucker_status tucker_matrix_set(tucker_matrix* m, size_t row, size_t col, int value);
TUCKER_API tucker_status tucker_matrix_row_label(const tucker_matrix* m, size_t row, char** out);
TUCKER_API tucker_status tucker_matrix_col_label(const tucker_matrix* m, size_t col, char** out);
TUCKER_API tucker_status tucker_matrix_stats(const tucker_matrix* m, size_t* ones, size_t* max_row_weight);
TUCKER_API tucker_status tucker_matrix_serialize(const tucker_matrix* m, tucker_format format, char** out);
/* All-zero rows and columns removed; labels follow. */
TUCKER_API tucker_status tucker_matrix_normalize(const tucker_matrix* m, tucker_matrix** out);

/* Search. Witness indices and labels always refer to the matrix passed in. */

/* *witness is set only when the matrix is not C1P and witness != NULL. */
TUCKER_API tucker_status tucker_check_c1p(const tucker_matrix* m, const tucker_options* opts, int* is_c1p,
                                          tucker_witness** witness);
/* *out is NULL when the matrix is C1P. */
TUCKER_API tucker_status tucker_find_min(const tucker_matrix* m, const tucker_options* opts, tucker_witness** out);
/* One per-type detector. Exact mode gives the smallest witness of the kind
 * (some witness for IV and V); conditional mode may report supersession, with
 * the superseding kinds in *superseded_mask. Type II is unsupported; type I
 * always runs the exact detector. */
TUCKER_API tucker_status tucker_find_type(const tucker_matrix* m, tucker_kind kind, const tucker_options* opts,
                                          tucker_outcome* outcome, unsigned* superseded_mask, tucker_witness** out);
/* Minimum asteroidal triple of columns. *found is 0 for a C1P matrix;
 * otherwise *ell is the path sum and *span (if requested) the spanned
 * pattern. */
TUCKER_API tucker_status tucker_min_triple(const tucker_matrix* m, const tucker_options* opts, int* found,
                                           size_t* ell, tucker_witness** span);

/* Brute force; bounds may be NULL for the defaults. */
TUCKER_API tucker_status tucker_oracle_c1p(const tucker_matrix* m, const tucker_oracle_bounds* bounds, int* is_c1p);
TUCKER_API tucker_status tucker_oracle_min(const tucker_matrix* m, const tucker_oracle_bounds* bounds,
                                           tucker_witness** out);
/* Least submatrix isomorphic to a pattern of the given kind, or NULL. */
TUCKER_API tucker_status tucker_oracle_min_of_kind(const tucker_matrix* m, tucker_kind kind,
                                                   const tucker_oracle_bounds* bounds, tucker_witness** out);
TUCKER_API tucker_status tucker_oracle_is_minimal(const tucker_matrix* m, const tucker_oracle_bounds* bounds,
                                                  int* is_minimal);

/* Witnesses */
TUCKER_API void tucker_witness_free(tucker_witness* w);
TUCKER_API tucker_kind tucker_witness_kind(const tucker_witness* w);
TUCKER_API int tucker_witness_k(const tucker_witness* w);
TUCKER_API size_t tucker_witness_size(const tucker_witness* w);
TUCKER_API size_t tucker_witness_row_count(const tucker_witness* w);
TUCKER_API size_t tucker_witness_col_count(const tucker_witness* w);
TUCKER_API size_t tucker_witness_row(const tucker_witness* w, size_t i);
TUCKER_API size_t tucker_witness_col(const tucker_witness* w, size_t i);
/* Detector that produced it, e.g. "triple" or "type4_conditional". */
TUCKER_API const char* tucker_witness_detector(const tucker_witness* w);
/* Path sum of the minimum triple, or -1 when not computed. */
TUCKER_API long tucker_witness_ell(const tucker_witness* w);
/* {"c1p":false,"type":..,"k":..,"rows":[labels],"cols":[labels],"size":..,
 *  "detector":..,"ell":..}; ell is omitted when unknown. */
TUCKER_API tucker_status tucker_witness_to_json(const tucker_witness* w, char** out);

#ifdef __cplusplus
}
#endif

#endif
