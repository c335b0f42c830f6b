// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo layer: counter-based word stream against NumPy reference
// vectors, log-derivative formulas on hand-picked spectra, Haar sampling
// statistics, and the public estimators (determinism plus agreement with
// the exact values).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "um/error.hpp"
#include "um/haar.hpp"
#include "um/moments.hpp"
#include "um/philox.hpp"
#include "um/rational.hpp"

using namespace um;

TEST_CASE("word stream matches the NumPy Philox reference") {
  // numpy.random.Philox(key=seed).random_raw(8)
  RandomStream a(0, 0);
  const std::uint64_t want_a[8] = {0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL,
                                   0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL,
                                   0x809bf322883987c3ULL, 0x471128b9e807f7ddULL,
                                   0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
  for (const std::uint64_t w : want_a) CHECK(a.next_u64() == w);

  RandomStream b(0xdeadbeef12345678ULL, 0);
  const std::uint64_t want_b[8] = {0x01e08b9944fc9ce9ULL, 0x4dd35999ef97e4c4ULL,
                                   0xfb4385fe6262b926ULL, 0xe8ca5d2e2ace8c50ULL,
                                   0xff773c94913479e4ULL, 0xee8e21a3b352f284ULL,
                                   0x39609748439dfd34ULL, 0x31051610b3684686ULL};
  for (const std::uint64_t w : want_b) CHECK(b.next_u64() == w);

  // Words 17..20 of key 1, i.e. the block at counter (5, 0, 0, 0).
  RandomStream c(1, 0);
  for (int i = 0; i < 16; ++i) c.next_u64();
  CHECK(c.next_u64() == 0x4f220e9548469d84ULL);
  CHECK(c.next_u64() == 0x9e0517ee616ba4fdULL);
  CHECK(c.next_u64() == 0xc34d24e42edbd61aULL);
  CHECK(c.next_u64() == 0xeb0698ca7bab38f1ULL);
}

TEST_CASE("substreams are reproducible and distinct") {
  RandomStream a(42, 0), b(42, 0), c(42, 1);
  bool any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t wa = a.next_u64();
    CHECK(wa == b.next_u64());
    any_diff = any_diff || wa != c.next_u64();
  }
  CHECK(any_diff);
}

TEST_CASE("uniform and normal draws look right") {
  RandomStream s(7, 0);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = s.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / 10000 - 0.5) < 0.02);

  double nsum = 0, nsq = 0;
  const int pairs = 20000;
  for (int i = 0; i < pairs; ++i) {
    double x, y;
    s.next_normal_pair(x, y);
    nsum += x + y;
    nsq += x * x + y * y;
  }
  const double n = 2.0 * pairs;
  const double mean = nsum / n;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(nsq / n - mean * mean - 1.0) < 0.03);
}

TEST_CASE("log derivative of Z on hand-picked spectra") {
  const double pi = std::acos(-1.0);

  EigenangleSample one;
  one.angles = {pi};
  const ZLog z1 = z_log_deriv(one);
  CHECK(std::abs(z1.z0 - std::complex<double>(2, 0)) < 1e-14);
  CHECK(std::abs(z1.log_deriv - std::complex<double>(0, -0.5)) < 1e-14);

  EigenangleSample pair;
  pair.angles = {pi / 2, -pi / 2};
  const ZLog z2 = z_log_deriv(pair);
  CHECK(std::abs(z2.z0 - std::complex<double>(2, 0)) < 1e-14);
  CHECK(std::abs(z2.log_deriv - std::complex<double>(0, -1)) < 1e-14);

  EigenangleSample empty;
  const ZLog z0 = z_log_deriv(empty);
  CHECK(z0.z0 == std::complex<double>(1, 0));
  CHECK(z0.log_deriv == std::complex<double>(0, 0));

  EigenangleSample bad;
  bad.angles = {1e-13};
  CHECK_THROWS_AS(z_log_deriv(bad), domain_error);
}

TEST_CASE("log derivative of the rotated polynomial") {
  const double pi = std::acos(-1.0);

  EigenangleSample one;
  one.angles = {pi};
  const VLog v1 = v_log_deriv(one);
  CHECK(std::abs(v1.log_deriv) < 1e-14);
  CHECK(v1.v0_abs == doctest::Approx(2.0).epsilon(1e-12));

  // Conjugate-symmetric spectrum: cotangent halves cancel, so the
  // derivative vanishes while staying real.
  EigenangleSample sym;
  sym.angles = {0.7, -0.7, 2.1, -2.1};
  const VLog vs = v_log_deriv(sym);
  CHECK(std::abs(vs.log_deriv.imag()) < 1e-12);
  CHECK(std::abs(vs.log_deriv.real()) < 1e-12);

  // Asymmetric spectrum: the value is -(1/2) sum cot(theta_j / 2), still real.
  EigenangleSample asym;
  asym.angles = {0.5, 1.2, -2.0};
  const VLog va = v_log_deriv(asym);
  const double want =
      -0.5 * (1 / std::tan(0.25) + 1 / std::tan(0.6) + 1 / std::tan(-1.0));
  CHECK(std::abs(va.log_deriv.imag()) < 1e-12);
  CHECK(va.log_deriv.real() == doctest::Approx(want).epsilon(1e-12));

  // |V| never drifts from |Z| across sampled spectra.
  RandomStream s(2026, 0);
  for (int i = 0; i < 1000; ++i) {
    const EigenangleSample draw = sample_haar(5, s);
    const double vz = v_log_deriv(draw).v0_abs;
    const double zz = std::abs(z_log_deriv(draw).z0);
    CHECK(std::abs(vz - zz) <= 1e-9 * zz);
  }
}

TEST_CASE("Haar samples have the right low moments") {
  for (const long N : {2L, 5L}) {
    RandomStream s(814, static_cast<std::uint64_t>(N));
    const int n = 50000;
    std::complex<double> tr_sum(0, 0);
    double tr2_sum = 0;
    for (int i = 0; i < n; ++i) {
      const EigenangleSample draw = sample_haar(N, s);
      CHECK(static_cast<long>(draw.angles.size()) == N);
      std::complex<double> tr(0, 0);
      const double pi = std::acos(-1.0);
      for (const double t : draw.angles) {
        CHECK(t > -pi);
        CHECK(t <= pi);
        tr += std::polar(1.0, t);
      }
      tr_sum += tr;
      tr2_sum += std::norm(tr);
    }
    // E[tr U] = 0 and E[|tr U|^2] = 1; tolerances sit beyond five standard
    // errors at this sample count and the seed is fixed.
    CHECK(std::abs(tr_sum.real() / n) < 0.025);
    CHECK(std::abs(tr_sum.imag() / n) < 0.025);
    CHECK(std::abs(tr2_sum / n - 1.0) < 0.03);
  }
  RandomStream s(1, 0);
  CHECK_THROWS_AS(sample_haar(0, s), domain_error);
}

TEST_CASE("estimator bookkeeping and determinism") {
  const McEstimate a = estimate_m_moment(1, 1, 4, 2000, 777, 1);
  CHECK(a.samples == 2000);
  CHECK(a.seed == 777);
  CHECK(a.resampled == 0);
  CHECK(a.std_error > 0);

  const McEstimate b = estimate_m_moment(1, 1, 4, 2000, 777, 2);
  const McEstimate c = estimate_m_moment(1, 1, 4, 2000, 777, 5);
  CHECK(a.mean_real == b.mean_real);
  CHECK(a.mean_imag == b.mean_imag);
  CHECK(a.std_error == b.std_error);
  CHECK(a.std_error_imag == b.std_error_imag);
  CHECK(b.mean_real == c.mean_real);
  CHECK(b.std_error == c.std_error);

  const McEstimate d = estimate_m_moment(1, 1, 4, 2000, 778, 1);
  CHECK(a.mean_real != d.mean_real);

  const McEstimate v = estimate_v_moment(1, 1, 2, 2000, 777, 3);
  CHECK(v.mean_imag == 0);
  CHECK(v.std_error_imag == 0);
  CHECK(v.mean_real == estimate_v_moment(1, 1, 2, 2000, 777, 1).mean_real);

  CHECK_THROWS_AS(estimate_m_moment(1, 1, 4, 999, 1, 1), domain_error);
  CHECK_THROWS_AS(estimate_m_moment(1, 3, 4, 2000, 1, 1), domain_error);
  CHECK_THROWS_AS(estimate_m_moment(0, 0, 4, 2000, 1, 1), domain_error);
  CHECK_THROWS_AS(estimate_v_moment(1, 2, 4, 2000, 1, 1), domain_error);
  CHECK_THROWS_AS(estimate_v_moment(1, -1, 4, 2000, 1, 1), domain_error);
}

TEST_CASE("estimates agree with the exact values") {
  const unsigned long long n = 30000;
  const std::uint64_t seed = 20260814;
  for (const long N : {2L, 5L}) {
    for (long k = 1; k <= 2; ++k) {
      for (long r = 0; r <= 2 * k; ++r) {
        const McEstimate e = estimate_m_moment(k, r, N, n, seed, 0);
        const double exact = rat_to_double(m_ratio_finite(k, r, N));
        CHECK(std::abs(e.mean_real - exact) <= 5 * e.std_error);
        CHECK(std::abs(e.mean_imag) <= 5 * e.std_error_imag + 1e-12);
        CHECK(e.resampled == 0);
      }
      for (long h = 0; h <= k; ++h) {
        const McEstimate e = estimate_v_moment(k, h, N, n, seed, 0);
        const double exact = rat_to_double(v_moment_finite(k, h, N));
        CHECK(std::abs(e.mean_real - exact) <= 5 * e.std_error);
        CHECK(e.mean_imag == 0);
      }
    }
  }
}
