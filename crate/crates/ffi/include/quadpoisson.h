#ifndef QUADPOISSON_H
#define QUADPOISSON_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. Identity checks that run to completion return `Ok` and
 * report the verdict through their `pass` out-parameter.
 */
typedef enum QpStatus {
  QP_STATUS_OK = 0,
  QP_STATUS_NULL_ARGUMENT = 1,
  QP_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, rational literal or inline r-matrix.
   */
  QP_STATUS_PARSE = 3,
  /**
   * Unknown catalog name or bad catalog parameters.
   */
  QP_STATUS_UNKNOWN_ALGEBRA = 4,
  /**
   * Dimension, index, degree or antisymmetry violation.
   */
  QP_STATUS_INVALID_INPUT = 5,
  /**
   * The operation needs a unital algebra.
   */
  QP_STATUS_NO_UNIT = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  QP_STATUS_PANIC = 7,
} QpStatus;

/**
 * A finite-dimensional associative algebra.
 */
typedef struct QpAlgebra QpAlgebra;

/**
 * A polynomial bracket of any degree.
 */
typedef struct QpBracket QpBracket;

/**
 * An antisymmetric r-matrix.
 */
typedef struct QpRMatrix QpRMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or null. Owned by the
 * library; valid until the next failing call.
 */
const char *qp_last_error(void);

/**
 * Library version as a static string.
 */
const char *qp_version(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void qp_string_free(char *s);

/**
 * Catalog algebra by name, e.g. `"quaternions"` or `"matrix(3)"`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` writable.
 */
enum QpStatus qp_algebra_catalog(const char *name, struct QpAlgebra **out);

/**
 * Algebra from its JSON file contents.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` writable.
 */
enum QpStatus qp_algebra_from_json(const char *json, struct QpAlgebra **out);

/**
 * Dimension of the algebra, 0 for null.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t qp_algebra_dim(const struct QpAlgebra *alg);

/**
 * Associativity and unit axioms.
 *
 * # Safety
 * `alg` must be a live handle; `pass` writable.
 */
enum QpStatus qp_algebra_validate(const struct QpAlgebra *alg, bool *pass);

/**
 * # Safety
 * `alg` must be null or a handle not yet freed.
 */
void qp_algebra_free(struct QpAlgebra *alg);

/**
 * r-matrix from inline shorthand over a catalog algebra with basis labels,
 * e.g. `"2*i^j - 1/2*j^k"`.
 *
 * # Safety
 * `alg` must be a live handle, `text` nul-terminated, `out` writable.
 */
enum QpStatus qp_rmatrix_parse(const struct QpAlgebra *alg,
                               const char *text,
                               struct QpRMatrix **out);

/**
 * r-matrix from its JSON file contents.
 *
 * # Safety
 * `json` must be nul-terminated; `out` writable.
 */
enum QpStatus qp_rmatrix_from_json(const char *json, struct QpRMatrix **out);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void qp_rmatrix_free(struct QpRMatrix *r);

/**
 * The quadratic bracket `scale·[r, x⊗x]`; `scale` is a rational literal
 * such as `"1/2"`.
 *
 * # Safety
 * Handles must be live, `scale` nul-terminated, `out` writable.
 */
enum QpStatus qp_derive(const struct QpAlgebra *alg,
                        const struct QpRMatrix *r,
                        const char *scale,
                        struct QpBracket **out);

/**
 * Bracket from its JSON file contents (any degree).
 *
 * # Safety
 * `json` must be nul-terminated; `out` writable.
 */
enum QpStatus qp_bracket_from_json(const char *json, struct QpBracket **out);

/**
 * Canonical JSON of a bracket; free the result with [`qp_string_free`].
 *
 * # Safety
 * `b` must be a live handle; `out` writable.
 */
enum QpStatus qp_bracket_to_json(const struct QpBracket *b, char **out);

/**
 * Coefficient of `x^k x^l` in `{x^i, x^j}` of a quadratic bracket, as text.
 *
 * # Safety
 * `b` must be a live handle; `out` writable.
 */
enum QpStatus qp_bracket_coefficient(const struct QpBracket *b,
                                     size_t i,
                                     size_t j,
                                     size_t k,
                                     size_t l,
                                     char **out);

/**
 * # Safety
 * `b` must be null or a handle not yet freed.
 */
void qp_bracket_free(struct QpBracket *b);

/**
 * Jacobi identity, exact.
 *
 * # Safety
 * `b` must be a live handle; `pass` writable.
 */
enum QpStatus qp_check_jacobi(const struct QpBracket *b, bool *pass);

/**
 * Compatibility of a quadratic bracket with the algebra product.
 *
 * # Safety
 * Handles must be live; `pass` writable.
 */
enum QpStatus qp_check_multiplicative(const struct QpAlgebra *alg,
                                      const struct QpBracket *b,
                                      bool *pass);

/**
 * Classical Yang–Baxter equation; needs a unit.
 *
 * # Safety
 * Handles must be live; `pass` writable.
 */
enum QpStatus qp_check_cybe(const struct QpAlgebra *alg, const struct QpRMatrix *r, bool *pass);

/**
 * ad-invariance of the Schouten bracket of `r`; needs a unit.
 *
 * # Safety
 * Handles must be live; `pass` writable.
 */
enum QpStatus qp_check_schouten_invariance(const struct QpAlgebra *alg,
                                           const struct QpRMatrix *r,
                                           bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUADPOISSON_H */
