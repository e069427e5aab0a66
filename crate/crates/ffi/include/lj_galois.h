#ifndef LJ_GALOIS_H
#define LJ_GALOIS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LjStatus {
  LJ_STATUS_OK = 0,
  LJ_STATUS_NULL_POINTER = 1,
  LJ_STATUS_INVALID_UTF8 = 2,
  LJ_STATUS_SYNTAX = 3,
  LJ_STATUS_INVALID_ARGUMENT = 4,
  /**
   * Poles or radicals outside the working field.
   */
  LJ_STATUS_UNDECIDED = 5,
  LJ_STATUS_NO_CONVERGENCE = 6,
  LJ_STATUS_INTERNAL = 7,
} LjStatus;

/**
 * A rational function over ℚ(√d).
 */
typedef struct LjRatFunc LjRatFunc;

/**
 * Kovacic verdict together with the equation it answers.
 */
typedef struct LjVerdict LjVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * Valid until the next call into this library on the same thread.
 */
const char *lj_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void lj_string_free(char *s);

/**
 * Parses an expression in `x`, e.g. `"(4 - 20*x^2 - 3*x^4)/(16*x^6)"`.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum LjStatus lj_ratfunc_parse(const char *text_in, struct LjRatFunc **out);

/**
 * # Safety
 * `h` must come from this library or be null.
 */
void lj_ratfunc_free(struct LjRatFunc *h);

/**
 * Renders in the parser's grammar with variable `x`.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum LjStatus lj_ratfunc_render(const struct LjRatFunc *h, char **out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum LjStatus lj_ratfunc_eval(const struct LjRatFunc *h, double x, double *out);

/**
 * Normal form `y'' = r(z) y` of the Lennard-Jones radial equation in
 * `z = r²`. Rationals are strings such as `"5"` or `"-3/2"`.
 *
 * # Safety
 * All strings must be valid C strings and `out` writable.
 */
enum LjStatus lj_normal_form(uint32_t nu,
                             uint32_t delta,
                             const char *a_bar,
                             const char *b_bar,
                             const char *c_bar,
                             const char *energy,
                             bool formal,
                             struct LjRatFunc **out);

/**
 * Runs Kovacic's algorithm on `y'' = r y`.
 *
 * # Safety
 * `r` must be a live handle and `out` writable.
 */
enum LjStatus lj_kovacic_solve(const struct LjRatFunc *r, struct LjVerdict **out);

/**
 * # Safety
 * `v` must come from this library or be null.
 */
void lj_verdict_free(struct LjVerdict *v);

/**
 * 1–3 for the case that produced a solution, 4 for no Liouvillian solution.
 *
 * # Safety
 * `v` must be a live handle and `out` writable.
 */
enum LjStatus lj_verdict_case(const struct LjVerdict *v, uint8_t *out);

/**
 * The same JSON document the command-line tool prints.
 *
 * # Safety
 * `v` must be a live handle and `out` writable.
 */
enum LjStatus lj_verdict_json(const struct LjVerdict *v, char **out);

/**
 * Zero-energy integrability of the `(2ν−2)`–`ν` family.
 *
 * # Safety
 * All strings must be valid C strings and `out` writable.
 */
enum LjStatus lj_integrable_zero_energy(uint32_t nu,
                                        const char *a_bar,
                                        const char *b_bar,
                                        const char *c_bar,
                                        bool formal,
                                        bool *out);

/**
 * Martinet–Ramis test for the Whittaker equation with rational κ, μ.
 *
 * # Safety
 * Both strings must be valid C strings and `out` writable.
 */
enum LjStatus lj_martinet_ramis(const char *kappa, const char *mu, bool *out);

/**
 * `B₂/σ³` of `αε((σ/r)^δ − (σ/r)^ν)` at `kT/ε = t_reduced`. `rel_tol ≤ 0`
 * selects the default tolerance.
 *
 * # Safety
 * `b2` and `err` must be writable.
 */
enum LjStatus lj_second_virial(uint32_t delta,
                               uint32_t nu,
                               double t_reduced,
                               double rel_tol,
                               double *b2,
                               double *err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LJ_GALOIS_H */
