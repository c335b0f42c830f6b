/* Copyright 2026 The unimoments authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the unimoments engine: exact moments of characteristic
 * polynomials of Haar-random unitary matrices and their derivatives, plus a
 * Monte Carlo cross-check.
 *
 * Conventions
 *   - Every fallible function returns an int status: UM_OK (0) on success,
 *     otherwise one of the UM_E* codes below. On failure um_last_error()
 *     returns a message describing the failing call in the current thread.
 *   - Exact values travel as opaque um_rat handles or as decimal strings
 *     "p" / "p/q"; strings returned by the library are heap-allocated and
 *     must be released with um_str_free.
 *   - Out-parameters are written only on success.
 */

#ifndef UNIMOMENTS_H
#define UNIMOMENTS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define UM_API __declspec(dllexport)
#else
#define UM_API __attribute__((visibility("default")))
#endif

/* Status codes; they double as CLI exit codes. */
#define UM_OK 0
#define UM_EUSAGE 1     /* malformed request (null pointer, missing input) */
#define UM_EDOMAIN 2    /* parameters outside an operation's domain */
#define UM_EINTERNAL 3  /* cross-checked routes disagreed: library bug */
#define UM_ECAPACITY 4  /* request exceeds a configured size guard */

UM_API const char* um_version(void);

/* Message for the most recent failing call in this thread ("" if none). */
UM_API const char* um_last_error(void);

/* Releases any string returned by this library. Safe on NULL. */
UM_API void um_str_free(char* s);

/* ---- exact rationals ------------------------------------------------- */

typedef struct um_rat um_rat;

UM_API int um_rat_from_string(const char* text, um_rat** out);
UM_API char* um_rat_to_string(const um_rat* x); /* "p" or "p/q" */
UM_API int um_rat_to_double(const um_rat* x, double* out);
UM_API void um_rat_free(um_rat* x);

/* ---- exact moment values ---------------------------------------------
 * M-ratio values are i-normalized: the returned rational equals
 * i^r * (order-r moment) / (zeroth moment), which is always real.
 * um_i_normalized_tag() names this convention for serialization.
 */

UM_API const char* um_i_normalized_tag(void);

/* Finite-size ratio, 0 <= r <= 2k, N >= 1. */
UM_API int um_m_ratio_finite(long k, long r, long N, um_rat** out);
/* Large-N limit of the ratio divided by N^r. */
UM_API int um_m_ratio_limit(long k, long r, um_rat** out);
/* Zeroth moment at finite N, and its large-N normalization. */
UM_API int um_moment_zero_finite(long k, long N, um_rat** out);
UM_API int um_moment_zero_limit(long k, um_rat** out);
/* Order-2h absolute moment of V'/V weighted by |V|^{2k}, 0 <= h <= k. */
UM_API int um_v_moment_finite(long k, long h, long N, um_rat** out);

/* ---- polynomials and rational functions in one variable -------------- */

typedef struct um_poly um_poly;
typedef struct um_ratfunc um_ratfunc;

/* m_ratio_finite with N symbolic: degree-r polynomial in N. */
UM_API int um_m_ratio_finite_polyN(long k, long r, um_poly** out);

UM_API long um_poly_degree(const um_poly* p); /* -1 for the zero polynomial */
UM_API int um_poly_coeff(const um_poly* p, long i, um_rat** out);
UM_API char* um_poly_render(const um_poly* p, const char* var);
UM_API int um_poly_eval(const um_poly* p, const um_rat* x, um_rat** out);
UM_API void um_poly_free(um_poly* p);

/* Large-N limit ratios with k symbolic, canonical (reduced, denominator
 * monic). um_m_* is the order-r M-ratio, um_v_* the order-2h V-ratio. */
UM_API int um_m_ratio_limit_ratfunc(long r, um_ratfunc** out);
UM_API int um_v_ratio_limit_ratfunc(long h, um_ratfunc** out);

UM_API long um_ratfunc_num_degree(const um_ratfunc* f);
UM_API long um_ratfunc_den_degree(const um_ratfunc* f);
UM_API int um_ratfunc_num_coeff(const um_ratfunc* f, long i, um_rat** out);
UM_API int um_ratfunc_den_coeff(const um_ratfunc* f, long i, um_rat** out);
UM_API char* um_ratfunc_render(const um_ratfunc* f, const char* var);
UM_API int um_ratfunc_eval(const um_ratfunc* f, const um_rat* x, um_rat** out);
UM_API void um_ratfunc_free(um_ratfunc* f);

/* ---- hypergeometric sums of matrix argument --------------------------
 * Parameters are decimal rational strings. The argument is z times the
 * N-by-N identity; the sum is truncated at total degree max_degree.
 */

/* Writes max_degree + 1 per-degree layers into a fresh array. Release the
 * array with um_rat_array_free. */
UM_API int um_hyper_layers(const char* const* upper, size_t n_upper,
                           const char* const* lower, size_t n_lower,
                           long N, long max_degree,
                           um_rat*** out_layers, size_t* out_count);
/* Truncated value: sum of z^d times layer d. */
UM_API int um_hyper_pfq_scalar(const char* const* upper, size_t n_upper,
                               const char* const* lower, size_t n_lower,
                               long N, const char* z, long max_degree,
                               um_rat** out);
UM_API void um_rat_array_free(um_rat** arr, size_t count);

/* Coefficient-wise comparison of the exponential generating function of
 * m_ratio_finite(k, ., N) against the (-k; -2k) confluent hypergeometric
 * sum at size N, degrees 0..r_max (r_max <= 2k). *out_equal is 1 when all
 * residuals vanish; the residual array is optional (pass NULL to skip). */
UM_API int um_egf_check(long k, long N, long r_max, int* out_equal,
                        um_rat*** out_residuals, size_t* out_count);

/* ---- Monte Carlo cross-check ----------------------------------------- */

typedef struct um_mc_estimate {
  double mean_real;
  double mean_imag;
  double std_error;      /* standard error of the real part */
  double std_error_imag; /* standard error of the imaginary part */
  unsigned long long samples;
  uint64_t seed;
  unsigned long long resampled; /* degenerate draws that were redrawn */
} um_mc_estimate;

/* Estimates the i-normalized order-r M-ratio (resp. the order-2h V-moment)
 * from `samples` independent Haar draws. Deterministic in (seed, samples):
 * the result is bit-identical for every thread count. threads <= 0 selects
 * the hardware concurrency. */
UM_API int um_estimate_m_moment(long k, long r, long N, unsigned long long samples,
                                uint64_t seed, int threads, um_mc_estimate* out);
UM_API int um_estimate_v_moment(long k, long h, long N, unsigned long long samples,
                                uint64_t seed, int threads, um_mc_estimate* out);

/* ---- self test -------------------------------------------------------- */

typedef struct um_selftest_result {
  char* name;
  int passed;
  char* detail; /* empty on success */
} um_selftest_result;

/* Runs the built-in consistency sweeps (full != 0 widens the ranges).
 * Returns UM_OK even when checks fail; inspect the results. */
UM_API int um_selftest(int full, um_selftest_result** out, size_t* out_count);
UM_API void um_selftest_free(um_selftest_result* results, size_t count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UNIMOMENTS_H */
