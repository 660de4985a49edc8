#ifndef SEPINV_H
#define SEPINV_H

/* Generated by cbindgen from sepinv-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this API.
 */
typedef enum SepinvStatus {
  /**
   * Success; out-parameters are populated.
   */
  SepinvStatus_Ok = 0,
  /**
   * A required pointer argument was NULL.
   */
  SepinvStatus_NullArgument = 1,
  /**
   * An argument was outside its domain (n = 0, (j,k) = (0,0), ...).
   */
  SepinvStatus_InvalidArgument = 2,
  /**
   * A string argument did not parse (point file, rational, grid).
   */
  SepinvStatus_ParseError = 3,
  /**
   * Two arguments that must share a dimension did not.
   */
  SepinvStatus_SizeMismatch = 4,
  /**
   * The index is not a member of the given set.
   */
  SepinvStatus_IndexNotInSet = 5,
  /**
   * A string argument was not valid UTF-8.
   */
  SepinvStatus_Utf8Error = 6,
} SepinvStatus;

/**
 * An ordered set of invariant indices (j,k).
 */
typedef struct SepinvIndexSet SepinvIndexSet;

/**
 * A point of K^n x K^n (a pair of coordinate vectors).
 */
typedef struct SepinvPoint SepinvPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a point file (`{"n": 3, "x": ["1","2","3"], "y": ["1","0","2"]}`)
 * into a fresh handle. Free it with `sepinv_point_free`.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string or NULL; `out` must be a
 * valid pointer.
 */
enum SepinvStatus sepinv_point_parse(const char *json, struct SepinvPoint **out);

/**
 * Renders a point back to its canonical point-file JSON.
 *
 * # Safety
 * `point` must be a live handle from this library; `out_json` must be a
 * valid pointer.
 */
enum SepinvStatus sepinv_point_render(const struct SepinvPoint *point, char **out_json);

/**
 * Number of coordinate pairs in the point; 0 when `point` is NULL.
 *
 * # Safety
 * `point` must be a live handle from this library or NULL.
 */
size_t sepinv_point_n(const struct SepinvPoint *point);

/**
 * Releases a point handle; NULL is a no-op.
 *
 * # Safety
 * `point` must be NULL or a handle not yet freed.
 */
void sepinv_point_free(struct SepinvPoint *point);

/**
 * Builds M(n), all (j,k) != (0,0) with j + k <= n. Free with
 * `sepinv_index_set_free`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SepinvStatus sepinv_index_set_m(size_t n, struct SepinvIndexSet **out);

/**
 * Builds the separating subset S(n): j <= n, k <= n/(j+1), (j,k) != (0,0).
 * Free with `sepinv_index_set_free`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SepinvStatus sepinv_index_set_s(size_t n, struct SepinvIndexSet **out);

/**
 * Copies `set` with one index removed.
 *
 * # Safety
 * `set` must be a live handle; `out` must be a valid pointer.
 */
enum SepinvStatus sepinv_index_set_without(const struct SepinvIndexSet *set,
                                           uint32_t j,
                                           uint32_t k,
                                           struct SepinvIndexSet **out);

/**
 * Number of indices in the set; 0 when `set` is NULL.
 *
 * # Safety
 * `set` must be a live handle from this library or NULL.
 */
size_t sepinv_index_set_len(const struct SepinvIndexSet *set);

/**
 * Reads the index at `pos` in canonical order.
 *
 * # Safety
 * `set` must be a live handle; `out_j` and `out_k` must be valid pointers.
 */
enum SepinvStatus sepinv_index_set_at(const struct SepinvIndexSet *set,
                                      size_t pos,
                                      uint32_t *out_j,
                                      uint32_t *out_k);

/**
 * Releases an index-set handle; NULL is a no-op.
 *
 * # Safety
 * `set` must be NULL or a handle not yet freed.
 */
void sepinv_index_set_free(struct SepinvIndexSet *set);

/**
 * Evaluates f_{j,k} on the point, writing the exact value as a canonical
 * string ("19", "-3/2"). Free the string with `sepinv_string_free`.
 *
 * # Safety
 * `point` must be a live handle; `out_value` must be a valid pointer.
 */
enum SepinvStatus sepinv_eval(const struct SepinvPoint *point,
                              uint32_t j,
                              uint32_t k,
                              char **out_value);

/**
 * Evaluates every invariant of `set` on the point and writes the values in
 * set order, joined with ';'. Free the string with `sepinv_string_free`.
 *
 * # Safety
 * `set` and `point` must be live handles; `out_values` must be a valid
 * pointer.
 */
enum SepinvStatus sepinv_fingerprint(const struct SepinvIndexSet *set,
                                     const struct SepinvPoint *point,
                                     char **out_values);

/**
 * Tests whether two points lie in the same orbit of the coupled coordinate
 * permutation action.
 *
 * # Safety
 * `p` and `q` must be live handles; `out_same` must be a valid pointer.
 */
enum SepinvStatus sepinv_same_orbit(const struct SepinvPoint *p,
                                    const struct SepinvPoint *q,
                                    bool *out_same);

/**
 * Matches two points. On `Ok` exactly one of two outcomes is written:
 *
 * - `*out_matched = true` and `*out_sigma` holds the permutation in 1-based
 *   one-line notation ("3 1 2"), meaning sigma applied to `q` gives `p`
 * - `*out_matched = false` and `out_witness_j`/`out_witness_k` name an index
 *   of S(n) whose invariant separates the points; `*out_sigma` stays NULL
 *
 * Free a non-NULL `*out_sigma` with `sepinv_string_free`.
 *
 * # Safety
 * `p` and `q` must be live handles; all out-parameters must be valid
 * pointers.
 */
enum SepinvStatus sepinv_match(const struct SepinvPoint *p,
                               const struct SepinvPoint *q,
                               bool *out_matched,
                               char **out_sigma,
                               uint32_t *out_witness_j,
                               uint32_t *out_witness_k);

/**
 * Checks `set` against every orbit of the n-fold grid power. `grid_csv` is a
 * comma-separated list of rationals ("-1,0,1/2,2"). Writes the number of
 * orbits examined and the number of colliding pairs (0 means `set` separates
 * the grid).
 *
 * # Safety
 * `set` must be a live handle; `grid_csv` must be a valid NUL-terminated
 * string; the out-parameters must be valid pointers.
 */
enum SepinvStatus sepinv_verify_separation(const struct SepinvIndexSet *set,
                                           size_t n,
                                           const char *grid_csv,
                                           uint64_t *out_orbits,
                                           uint64_t *out_collisions);

/**
 * Writes |M(n)| = (n^2 + 3n)/2 and |S(n)| = n + D(n).
 *
 * # Safety
 * `out_m` and `out_s` must be valid pointers.
 */
enum SepinvStatus sepinv_sizes(uint64_t n, uint64_t *out_m, uint64_t *out_s);

/**
 * Releases a string allocated by this library; NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void sepinv_string_free(char *s);

/**
 * Static name for a status code; do not free.
 */
const char *sepinv_status_name(enum SepinvStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEPINV_H */
