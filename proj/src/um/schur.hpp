// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace um {

// Exact determinant by fraction Gaussian elimination. Exposed for tests.
Rat det_exact(std::vector<std::vector<Rat>> m);

// Hook-content formula: s_lam(1^k) = (k poch lam) / hook_number(lam).
// Zero exactly when l(lam) > k.
Rat schur_eval_ones(const Partition& lam, long k);

// General evaluation via the Jacobi-Trudi determinant in the complete
// homogeneous basis; the h_m values come from the one-variable-at-a-time
// recurrence, which is stable under repeated points (the bialternant is
// not, and repeated points are our main use case).
// Throws domain_error when pt has fewer entries than l(lam).
Rat schur_eval(const Partition& lam, const std::vector<Rat>& pt);

// One-row shifted Schur function at the rectangle point with k arguments
// all equal to N: (N fall r) * h_r(1^k). Zero for r < 0, one for r = 0.
Rat h_star_rect(long r, long k, long N);

// Shifted Schur function s*_mu at k arguments all equal to N. Computed
// three ways and cross-checked:
//   (a) hook_number(mu) * s_{mu^t}(1^N) * s_mu(1^k)
//   (b) (-1)^|mu| * ((-N) poch mu) * (k poch mu) / hook_number(mu)
//   (c) det[ h_star_rect(mu_i - i + j, k, N + j - 1) ], R x R with R = l(mu)
// Throws internal_error if the routes disagree. Vanishes exactly when
// mu_1 > N or l(mu) > k (mu sticking out of the k-rows-by-N-columns box).
Rat shifted_schur_rect(const Partition& mu, long k, long N);

struct BinomialCheckResult {
  bool equal;
  Rat lhs;
  Rat rhs;
  Rat residual;  // lhs - rhs, exactly
};

// Binomial expansion of a rectangular character: with lam = N parts of
// size k and points x_1..x_n,
//   s_lam(1+x_1, ..., 1+x_n) / s_lam(1^n)
//     = sum_mu s*_mu(at N copies of k) s_mu(x) / (n poch mu),
// the sum running over mu with mu_1 <= k and l(mu) <= N (all other terms
// vanish). Both sides are evaluated exactly by independent code paths.
BinomialCheckResult binomial_check(long k, long N, long n, const std::vector<Rat>& pt);

}  // namespace um
