/* C interface for the bgcheb library. Generated; do not edit. */

#ifndef BGCHEB_H
#define BGCHEB_H

/* This file is produced by cbindgen from the bgcheb-ffi crate. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Node family selector for [`bg_points_new`].
typedef enum {
  // Zeros of the degree-`n` member (`count` = `n`, yields `n` points).
  BG_POINT_KIND_FIRST_KIND = 0,
  // Endpoint-including family (`count` = number of points, at least 2).
  BG_POINT_KIND_LOBATTO = 1,
  // Interior critical points of the degree-`count` member
  // (yields `count - 1` points, `count` at least 2).
  BG_POINT_KIND_EXTREMA = 2,
  // Equispaced analogue of the zeros in the chord variable.
  BG_POINT_KIND_EQUISPACED_FIRST_KIND = 3,
  // Equispaced analogue of the endpoint family in the chord variable.
  BG_POINT_KIND_EQUISPACED_LOBATTO = 4,
} BgPointKind;

// How a trimmed member relates to a classical polynomial on its interval.
typedef enum {
  // The member is not a polynomial.
  BG_POLY_CASE_NOT_POLYNOMIAL = 0,
  // The member equals `sign * T_degree` composed with the arccosine.
  BG_POLY_CASE_COSINE = 1,
  // The member equals `sign * sin(degree * arccos x)`.
  BG_POLY_CASE_SINE = 2,
} BgPolyCase;

// Status code returned by every API call.
typedef enum {
  // The call succeeded.
  BG_STATUS_OK = 0,
  // An argument lies outside the mathematical domain of the operation.
  BG_STATUS_DOMAIN_ERROR = 1,
  // Interpolation nodes coincide, so barycentric weights cannot be formed.
  BG_STATUS_DEGENERATE_NODES = 2,
  // A string argument could not be parsed.
  BG_STATUS_PARSE_ERROR = 3,
  // Serialization failed.
  BG_STATUS_SERIALIZATION_ERROR = 4,
  // A required pointer argument was null.
  BG_STATUS_NULL_POINTER = 5,
  // An argument was structurally invalid (bad enum value, short buffer).
  BG_STATUS_INVALID_ARGUMENT = 6,
  // The library aborted an internal computation; report this as a bug.
  BG_STATUS_INTERNAL_ERROR = 7,
} BgStatus;

// Opaque exact parameter pair handle.
typedef struct BgParamPair BgParamPair;

// Opaque node set handle.
typedef struct BgPointSet BgPointSet;

// Result of [`bg_classify`]: the collapse case, the classical degree it
// collapses onto (0 when not a polynomial), and the sign (+1, -1, or 0
// when not a polynomial).
typedef struct {
  // Which collapse case applies.
  BgPolyCase kind;
  // Degree of the classical counterpart; 0 when not a polynomial.
  uint64_t degree;
  // +1 or -1 for polynomial cases, 0 otherwise.
  int32_t sign;
} BgClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the library version as a static NUL-terminated string.
const char *bg_version(void);

// Returns the message describing the most recent failure on this thread.
//
// The pointer is owned by the library and stays valid until the next
// failing call on the same thread. Never null; initially empty.
const char *bg_last_error_message(void);

// Builds the exact parameter pair `(beta_num/beta_den, gamma_num/gamma_den)`.
//
// Requires `0 <= beta, gamma < 2` and `beta + gamma < 2`. On success
// `*out` owns the handle; release it with [`bg_params_free`].
//
// # Safety
// `out` must be a valid pointer to a writable pointer slot.
BgStatus bg_params_new(int64_t beta_num,
                       int64_t beta_den,
                       int64_t gamma_num,
                       int64_t gamma_den,
                       BgParamPair **out);

// Builds a parameter pair from NUL-terminated strings such as `"1/3"`.
//
// Decimal strings are rejected; write exact fractions.
//
// # Safety
// `beta` and `gamma` must be valid NUL-terminated strings and `out` a
// writable pointer slot.
BgStatus bg_params_parse(const char *beta, const char *gamma, BgParamPair **out);

// Builds a float-backed parameter pair for irrational trims.
//
// Such pairs support every numeric operation but are refused by
// [`bg_classify`], which needs exact arithmetic.
//
// # Safety
// `out` must be a writable pointer slot.
BgStatus bg_params_from_f64(double beta, double gamma, BgParamPair **out);

// Builds the classical (untrimmed) parameter pair `(0, 0)`.
//
// # Safety
// `out` must be a writable pointer slot.
BgStatus bg_params_classical(BgParamPair **out);

// Releases a parameter pair handle. Accepts null.
//
// # Safety
// `params` must be null or a pointer obtained from a `bg_params_*`
// constructor that has not been freed yet.
void bg_params_free(BgParamPair *params);

// Writes the angular span `rho = 2 - beta - gamma` to `*out`.
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_params_rho(const BgParamPair *params, double *out);

// Writes the endpoints of the supported interval to `*out_lo`, `*out_hi`.
//
// # Safety
// `params` must be a live handle; both out pointers must be writable.
BgStatus bg_params_interval(const BgParamPair *params, double *out_lo, double *out_hi);

// Writes `true` to `*out` when the pair is exact (rational-backed).
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_params_is_exact(const BgParamPair *params, bool *out);

// Evaluates the degree-`n` member at `x` by the closed form.
//
// `x` must lie in `[-1, 1]` up to a tiny clamp band.
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_eval(uint32_t n, const BgParamPair *params, double x, double *out);

// Evaluates the degree-`n` member at `x` by the three-term recurrence.
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_eval_recurrence(uint32_t n, const BgParamPair *params, double x, double *out);

// Evaluates the degree-`n` companion function (the sine-branch partner
// whose zeros add the interval endpoints) at `x`.
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_eval_companion(uint32_t n, const BgParamPair *params, double x, double *out);

// Decides whether the degree-`n` member collapses onto a classical
// polynomial (or pure sine) and writes the case to `*out`.
//
// Requires an exact (rational-backed) pair.
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_classify(uint32_t n, const BgParamPair *params, BgClassification *out);

// Builds a node family. See [`BgPointKind`] for the meaning of `count`.
//
// On success `*out` owns the handle; release it with [`bg_points_free`].
//
// # Safety
// `params` must be a live handle and `out` a writable pointer slot.
BgStatus bg_points_new(BgPointKind kind, size_t count, const BgParamPair *params, BgPointSet **out);

// Writes the number of points to `*out`.
//
// # Safety
// `points` must be a live handle and `out` writable.
BgStatus bg_points_len(const BgPointSet *points, size_t *out);

// Writes the abscissa at `index` (0-based, decreasing order) to `*out`.
//
// # Safety
// `points` must be a live handle and `out` writable.
BgStatus bg_points_get(const BgPointSet *points, size_t index, double *out);

// Copies all abscissae (decreasing order) into `buf`.
//
// `buf_len` must be at least the set length (query it with
// [`bg_points_len`]).
//
// # Safety
// `points` must be a live handle; `buf` must point to at least `buf_len`
// writable doubles.
BgStatus bg_points_copy(const BgPointSet *points, double *buf, size_t buf_len);

// Applies the sine map with stretch `alpha` in `(0, 1]` and writes the
// mapped set to `*out` as a new handle.
//
// # Safety
// `points` must be a live handle and `out` a writable pointer slot.
BgStatus bg_points_map_kte(const BgPointSet *points, double alpha, BgPointSet **out);

// Releases a node set handle. Accepts null.
//
// # Safety
// `points` must be null or a pointer obtained from a points constructor
// that has not been freed yet.
void bg_points_free(BgPointSet *points);

// Computes the weighted inner product of the degree-`r` and degree-`s`
// members. `node_count = 0` selects the accuracy-matched default rule.
//
// # Safety
// `params` must be a live handle and `out` writable.
BgStatus bg_inner_product(uint32_t r,
                          uint32_t s,
                          const BgParamPair *params,
                          size_t node_count,
                          double *out);

// Evaluates the Lebesgue function of the node set at `x`.
//
// # Safety
// `points` must be a live handle and `out` writable.
BgStatus bg_lebesgue_function(const BgPointSet *points, double x, double *out);

// Computes the Lebesgue constant of the node set by a scanned grid plus
// local refinement. `grid_size = 0` selects the default resolution. The
// maximizing abscissa is written to `*out_argmax` (may be null if not
// wanted).
//
// # Safety
// `points` must be a live handle and `out_constant` writable;
// `out_argmax` must be writable when non-null.
BgStatus bg_lebesgue_constant(const BgPointSet *points,
                              size_t grid_size,
                              double *out_constant,
                              double *out_argmax);

// Writes the symmetric-trim threshold `4 / (pi n^2 (2 + pi ln(n + 1)))`
// below which the endpoint family keeps logarithmic Lebesgue growth.
//
// # Safety
// `out` must be writable.
BgStatus bg_log_growth_threshold(size_t n, double *out);

// Searches `[0, 1/n]` for the one-sided trim whose endpoint family of
// `n` points minimizes the Lebesgue constant. Writes the trim to
// `*out_param` and the constant to `*out_constant`.
//
// # Safety
// Both out pointers must be writable.
BgStatus bg_optimal_beta(size_t n, double tol, double *out_param, double *out_constant);

// Searches `[0, 1/(n+1)]` for the symmetric trim whose endpoint family of
// `n` points minimizes the Lebesgue constant. Writes the trim to
// `*out_param` and the constant to `*out_constant`.
//
// # Safety
// Both out pointers must be writable.
BgStatus bg_optimal_delta(size_t n, double tol, double *out_param, double *out_constant);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BGCHEB_H */
