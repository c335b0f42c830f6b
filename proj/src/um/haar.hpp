// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "philox.hpp"

namespace um {

// Spectrum of one Haar-distributed unitary matrix; everything we estimate
// depends on the matrix only through its eigenangles.
struct EigenangleSample {
  std::vector<double> angles;  // each in (-pi, pi]
};

struct McEstimate {
  double mean_real = 0;
  double mean_imag = 0;
  double std_error = 0;       // standard error of the real part
  double std_error_imag = 0;  // standard error of the imaginary part
  unsigned long long samples = 0;
  std::uint64_t seed = 0;
  unsigned long long resampled = 0;  // draws discarded as degenerate
};

// Eigenangles of a Haar unitary: complex Ginibre matrix, Householder QR,
// then each column of Q is rotated by the phase of the matching diagonal
// entry of R. Without that correction QR is not Haar. Retries once on a
// (measure-zero) degenerate factorization, then throws internal_error.
EigenangleSample sample_haar(long N, RandomStream& stream);

struct ZLog {
  std::complex<double> z0;        // Z(0) = prod (1 - e^{i theta_j})
  std::complex<double> log_deriv; // Z'(0)/Z(0)
};

// Z(theta) = prod_j (1 - e^{i(theta_j - theta)}), so
//   d/dtheta log(1 - e^{i(theta_j - theta)}) |_0 = i e^{i theta_j} / (1 - e^{i theta_j})
//     = -cot(theta_j / 2) / 2 - i/2,
// using 1/(1 - e^{i t}) = (1 + i cot(t/2)) / 2. Summing over j:
//   Z'(0)/Z(0) = -(1/2) sum_j cot(theta_j/2) - iN/2.
// Throws domain_error when the sample is degenerate (an angle within 1e-12
// of zero, or |Z| underflowing); callers that own the stream resample.
ZLog z_log_deriv(const EigenangleSample& s);

struct VLog {
  std::complex<double> log_deriv;  // V'(0)/V(0) = iN/2 + Z'(0)/Z(0), real up to rounding
  double v0_abs = 0;               // |V(0)|, checked against |Z(0)|
};

// The rotated polynomial V(theta) = e^{iN(theta+pi)/2} e^{-i sum theta_j/2} Z(theta)
// is real for real theta with |V| = |Z|. v_log_deriv recomputes |V(0)| from
// that definition and enforces agreement with |Z(0)| to 1e-9 relative.
VLog v_log_deriv(const EigenangleSample& s);

// Monte Carlo estimate of the i-normalized moment ratio of order r: the
// per-draw statistic is |Z|^{2k} (Z'/Z)^r i^r / (exact zeroth moment), whose
// mean converges to m_ratio_finite(k, r, N) with imaginary part 0.
McEstimate estimate_m_moment(long k, long r, long N, unsigned long long samples,
                             std::uint64_t seed, int threads);

// Monte Carlo estimate of |V(0)|^{2k} |V'/V|^{2h}; the target is the exact
// v_moment_finite(k, h, N). Purely real by construction.
McEstimate estimate_v_moment(long k, long h, long N, unsigned long long samples,
                             std::uint64_t seed, int threads);

}  // namespace um
