// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "partition.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

namespace um {

// All M-ratio values below are i-normalized: the stored rational is
// i^r times the raw ratio of the order-r moment to the zeroth moment, which
// is always real. The raw moment is value * i^(-r) * (zeroth moment).
inline constexpr const char* kINormalizedTag = "i-normalized";

enum class MomentKind {
  m_ratio_finite,
  m_ratio_limit,
  m_zero_finite,
  m_zero_limit,
  v_finite,
  v_ratio_limit,
};

struct MomentRecord {
  MomentKind kind;
  long k;
  long r_or_2h;
  long N;  // -1 when not applicable (limit kinds)
  Rat value;
  std::string convention;  // kINormalizedTag for M-ratio kinds, "real" otherwise
};

MomentRecord make_record(MomentKind kind, long k, long r_or_2h, long N, Rat value);

// Finite-size i-normalized moment ratio of order r at matrix size N:
//   sum over partitions mu of r of  (r!/h_mu^2) (N poch mu)((-k) poch mu)/((-2k) poch mu).
// Requires 0 <= r <= 2k (beyond that the denominator factors can vanish).
Rat m_ratio_finite(long k, long r, long N);

// Large-N limit of the above after dividing by N^r:
//   sum over mu of r of (r!/h_mu^2) (k poch mu)/((2k) poch mu).
Rat m_ratio_limit(long k, long r);

// m_ratio_limit with k symbolic, as a canonical reduced rational function.
// Built from poch_poly products, never by interpolation.
RatFuncQ m_ratio_limit_ratfunc(long r);

// m_ratio_finite with N symbolic: polynomial in N of degree exactly r whose
// leading coefficient equals m_ratio_limit(k, r).
PolyQ m_ratio_finite_polyN(long k, long r);

// Zeroth moment at finite N: the Schur value of the k-rows-by-N rectangle at
// 2k ones, equal to a Barnes G ratio. Both routes are computed and must
// agree exactly (internal_error otherwise).
Rat moment_zero_finite(long k, long N);

// Zeroth moment in the large-N normalization: G(k+1)^2 / G(2k+1).
Rat moment_zero_limit(long k);

// Absolute moment of the log-derivative of the rotated characteristic
// polynomial, order 2h, at size N. Derivation recorded in moments.cpp;
// requires h <= k. Exact, nonnegative.
Rat v_moment_finite(long k, long h, long N);

// Large-N limit ratio of the above to the zeroth moment, k symbolic.
RatFuncQ v_ratio_limit_ratfunc(long h);

}  // namespace um
