#ifndef HOPFCHECK_H
#define HOPFCHECK_H

/* Generated from the Rust sources by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this ABI.
 */
typedef enum HcStatus {
  /**
   * The call succeeded and all out pointers are filled.
   */
  HC_STATUS_OK = 0,
  /**
   * A mathematical failure: broken axioms, structural obstructions.
   */
  HC_STATUS_MATH_ERROR = 1,
  /**
   * Malformed input: bad JSON, bad names, bad moduli, IO problems.
   */
  HC_STATUS_PARSE_ERROR = 2,
  /**
   * A null pointer or non-UTF-8 string was passed in.
   */
  HC_STATUS_INVALID_ARGUMENT = 3,
  /**
   * An internal panic was caught at the boundary.
   */
  HC_STATUS_PANIC = 4,
} HcStatus;

/**
 * Opaque handle to a loaded algebra, coalgebra, bialgebra, or Hopf algebra.
 */
typedef struct HcAlgebra HcAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the message for the most recent failure on this thread, or null
 * if the last call succeeded.
 *
 * # Safety
 * The pointer is borrowed: it stays valid until the next `hc_*` call on the
 * same thread and must not be freed.
 */
const char *hc_last_error(void);

/**
 * Parses an algebra/1 JSON document into a handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` to a writable
 * pointer slot. On `HC_STATUS_OK` the caller owns the handle and must
 * release it with `hc_algebra_free`.
 */
enum HcStatus hc_algebra_from_json(const char *text, struct HcAlgebra **out);

/**
 * Serializes a handle back to the canonical algebra/1 JSON document.
 *
 * # Safety
 * `h` must be a live handle from this library and `out` a writable pointer
 * slot. On `HC_STATUS_OK` the caller owns the string and must release it
 * with `hc_string_free`.
 */
enum HcStatus hc_algebra_to_json(const struct HcAlgebra *h, char **out);

/**
 * Builds the dual of the group algebra of a catalog group over F_p.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a writable pointer slot.
 * On `HC_STATUS_OK` the caller owns the handle.
 */
enum HcStatus hc_build_group_dual(const char *name, uint64_t p, struct HcAlgebra **out);

/**
 * Builds the group algebra of a catalog group over F_p.
 *
 * # Safety
 * Same contract as `hc_build_group_dual`.
 */
enum HcStatus hc_build_group_algebra(const char *name, uint64_t p, struct HcAlgebra **out);

/**
 * Dimension of the algebra behind the handle; 0 if the handle is null.
 *
 * # Safety
 * `h` must be null or a live handle from this library.
 */
size_t hc_algebra_dim(const struct HcAlgebra *h);

/**
 * Field modulus of the algebra behind the handle; 0 if the handle is null.
 *
 * # Safety
 * `h` must be null or a live handle from this library.
 */
uint64_t hc_algebra_modulus(const struct HcAlgebra *h);

/**
 * Checks the axioms of the handle's declared kind and writes the number of
 * violations. On violations the first one is available via `hc_last_error`
 * while the status stays `HC_STATUS_OK`: the check itself succeeded.
 *
 * # Safety
 * `h` must be a live handle and `out_violations` a writable slot.
 */
enum HcStatus hc_algebra_validate(const struct HcAlgebra *h, size_t *out_violations);

/**
 * Writes the dimension of the Jacobson radical.
 *
 * # Safety
 * `h` must be a live handle and `out_dim` a writable slot.
 */
enum HcStatus hc_radical_dim(const struct HcAlgebra *h, size_t *out_dim);

/**
 * Writes whether the algebra behind the handle is semisimple.
 *
 * # Safety
 * `h` must be a live handle and `out` a writable slot.
 */
enum HcStatus hc_is_semisimple(const struct HcAlgebra *h, bool *out);

/**
 * Runs the seven-way semisimplicity report and returns it as canonical
 * JSON (the report/1 document).
 *
 * # Safety
 * `h` must be a live handle and `out` a writable pointer slot. On
 * `HC_STATUS_OK` the caller owns the string.
 */
enum HcStatus hc_masuoka_report_json(const struct HcAlgebra *h, char **out);

/**
 * Runs the full instance suite at the given modulus and group-order bound,
 * returning the suite/1 JSON document and whether every instance passed.
 *
 * # Safety
 * `out_json` and `out_passed` must be writable slots. On `HC_STATUS_OK`
 * the caller owns the string.
 */
enum HcStatus hc_suite_json(uint64_t p, size_t max_group_order, char **out_json, bool *out_passed);

/**
 * Releases a handle. Null is a no-op.
 *
 * # Safety
 * `h` must be null or a handle from this library not freed before.
 */
void hc_algebra_free(struct HcAlgebra *h);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string from this library not freed before.
 */
void hc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFCHECK_H */
