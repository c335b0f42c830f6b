// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace um {

struct HyperParams {
  std::vector<Rat> upper;  // a_i
  std::vector<Rat> lower;  // b_j
  long N = 1;              // matrix size; argument is z * identity
  Rat z = Rat(0);
  long max_degree = 0;  // truncation by total degree |lam|
};

// Degree layers of the hypergeometric sum of matrix argument at a scalar
// matrix: layer d = sum over lam of d with l(lam) <= N of
//   (prod_i a_i poch lam / prod_j b_j poch lam) * (N poch lam) / h_lam^2,
// so the truncated function value is sum_d z^d * layer_d.
//
// A term whose numerator product (including the N factor) vanishes
// contributes zero and is skipped before any denominator inspection; this
// is what makes series with negative-integer upper parameters terminate
// cleanly. A vanishing denominator under a nonzero numerator raises a
// domain_error naming the first offending partition in enumeration order.
std::vector<Rat> hyper_layers(const std::vector<Rat>& upper, const std::vector<Rat>& lower, long N,
                              long max_degree);

Rat hyper_pfq_scalar(const HyperParams& p);

struct EgfCheckResult {
  bool equal;
  std::vector<Rat> residuals;  // layer_r - m_ratio_finite(k, r, N)/r!, degree 0..r_max
};

// Coefficient-wise comparison of the exponential generating function of the
// finite-size moment ratios against the confluent hypergeometric sum with
// upper parameter -k and lower parameter -2k at matrix size N.
// Requires r_max <= 2k.
EgfCheckResult egf_check(long k, long N, long r_max);

}  // namespace um
