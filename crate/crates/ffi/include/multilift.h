#ifndef MULTILIFT_H
#define MULTILIFT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first four match the command line exit statuses.
 */
typedef enum MlStatus {
  ML_STATUS_OK = 0,
  ML_STATUS_VERIFY_FAILED = 1,
  ML_STATUS_INVALID_PARAMS = 2,
  ML_STATUS_CAP_EXCEEDED = 3,
  ML_STATUS_NULL_POINTER = 4,
  ML_STATUS_INTERNAL = 5,
} MlStatus;

/**
 * Opaque handle to a built multi-component code.
 */
typedef struct MlCode MlCode;

typedef struct MlVerifyReport {
  /**
   * Distinct subspaces counted after re-canonicalisation equal the size.
   */
  bool cardinality_ok;
  size_t min_distance;
  bool components_disjoint;
} MlVerifyReport;

typedef struct MlExportCheck {
  bool cardinality_ok;
  bool min_distance_ok;
  bool components_ok;
  size_t distinct;
  size_t duplicates;
  size_t malformed;
} MlExportCheck;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next library call on the same thread.
 */
const char *ml_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void ml_string_free(char *s);

/**
 * Exact code size N as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MlStatus ml_size_formula(uint64_t q, size_t n, size_t k, size_t d, char **out);

/**
 * Size for `d = k` from the closed form.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MlStatus ml_size_closed_form(uint64_t q, size_t n, size_t k, char **out);

/**
 * Lower bound on A_q(n, d, k) as a decimal string.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MlStatus ml_lower_bound(uint64_t q, size_t n, size_t k, size_t d, char **out);

/**
 * Largest size of a `rows x cols` rank-metric code with minimum distance `d`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MlStatus ml_singleton_bound(uint64_t q, size_t rows, size_t cols, size_t d, char **out);

/**
 * Builds a code. Only the component structure is computed; codewords are
 * produced on demand.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum MlStatus ml_code_build(uint64_t q, size_t n, size_t k, size_t d, struct MlCode **out);

/**
 * # Safety
 * `code` must be null or a handle from [`ml_code_build`], freed once.
 */
void ml_code_free(struct MlCode *code);

/**
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum MlStatus ml_code_size(const struct MlCode *code, char **out);

/**
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum MlStatus ml_code_component_count(const struct MlCode *code, size_t *out);

/**
 * All codewords as reduced `k x n` bases, flattened row-major one after the
 * other: `*out_count * k * n` digits in total, each a GF(q) element index.
 * Release with [`ml_digits_free`].
 *
 * # Safety
 * `code` must be a live handle; the out pointers must be writable.
 */
enum MlStatus ml_code_codewords(const struct MlCode *code,
                                uint64_t cap,
                                uint32_t **out_digits,
                                size_t *out_len,
                                size_t *out_count);

/**
 * # Safety
 * `digits` and `len` must come from one [`ml_code_codewords`] call.
 */
void ml_digits_free(uint32_t *digits, size_t len);

/**
 * Enumerates the code and checks size and minimum distance. Returns
 * [`MlStatus::VerifyFailed`] if any check fails; the report is filled in
 * either way.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum MlStatus ml_code_verify(const struct MlCode *code, uint64_t cap, struct MlVerifyReport *out);

/**
 * JSON export. With `include_codewords`, fails with
 * [`MlStatus::CapExceeded`] above `cap` codewords.
 *
 * # Safety
 * `code` must be a live handle and `out` writable.
 */
enum MlStatus ml_code_export_json(const struct MlCode *code,
                                  bool include_codewords,
                                  uint64_t cap,
                                  char **out);

/**
 * Re-checks a JSON export against its own header.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum MlStatus ml_verify_json(const char *json, uint64_t cap, struct MlExportCheck *out);

/**
 * Bound table over `q_list`, `2 <= n <= n_max`, `1 <= k <= k_max`, as CSV
 * (`markdown` false) or a markdown table. `d_equal_k` restricts to `d = k`.
 *
 * # Safety
 * `q_list` must point to `q_len` values (or be null with `q_len` 0) and
 * `out` must be writable.
 */
enum MlStatus ml_bound_table(const uint64_t *q_list,
                             size_t q_len,
                             size_t n_max,
                             size_t k_max,
                             bool d_equal_k,
                             bool markdown,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MULTILIFT_H */
