// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0
//
// Moment ratios (finite size, large-size limit, symbolic in N and in k),
// zeroth moments, absolute V moments, and the hypergeometric generating
// function that ties the finite-size ratios together.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "um/error.hpp"
#include "um/hypergeom.hpp"
#include "um/moments.hpp"
#include "um/polynomial.hpp"
#include "um/rational.hpp"
#include "um/rational_function.hpp"

using namespace um;

namespace {

Rat q(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

PolyQ P(std::vector<Rat> c) { return PolyQ(std::move(c)); }

Rat C(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  return Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

}  // namespace

TEST_CASE("order one ratio is half the matrix size") {
  for (long k = 1; k <= 5; ++k) {
    for (long N = 1; N <= 10; ++N) {
      CHECK(m_ratio_finite(k, 1, N) == q(N, 2));
    }
  }
}

TEST_CASE("finite ratio spot values") {
  CHECK(m_ratio_finite(1, 0, 9) == 1);
  CHECK(m_ratio_finite(5, 0, 2) == 1);
  CHECK(m_ratio_finite(1, 1, 4) == 2);
  CHECK(m_ratio_finite(1, 2, 2) == q(1, 3));
  CHECK(m_ratio_finite(2, 3, 3) == q(9, 5));
  CHECK(m_ratio_finite(2, 4, 5) == q(103, 7));
  CHECK(m_ratio_finite(3, 5, 4) == q(262, 21));
  CHECK(m_ratio_finite(4, 2, 7) == q(71, 6));
  const std::vector<Rat> row = {q(1, 6), q(4, 5), q(19, 10), q(52, 15)};
  for (long N = 1; N <= 4; ++N) {
    CHECK(m_ratio_finite(2, 2, N) == row[static_cast<size_t>(N - 1)]);
  }
}

TEST_CASE("limit ratio spot values") {
  for (long k = 1; k <= 5; ++k) {
    CHECK(m_ratio_limit(k, 0) == 1);
    CHECK(m_ratio_limit(k, 1) == q(1, 2));
  }
  CHECK(m_ratio_limit(1, 2) == q(1, 6));
  CHECK(m_ratio_limit(2, 2) == q(7, 30));
  CHECK(m_ratio_limit(2, 4) == q(11, 280));
  CHECK(m_ratio_limit(3, 4) == q(131, 2520));
  CHECK(m_ratio_limit(4, 6) == q(109937, 9081072));
}

TEST_CASE("ratio domain guards") {
  CHECK_THROWS_AS(m_ratio_finite(0, 0, 1), domain_error);
  CHECK_THROWS_AS(m_ratio_finite(1, -1, 1), domain_error);
  CHECK_THROWS_AS(m_ratio_finite(1, 1, 0), domain_error);
  CHECK_THROWS_AS(m_ratio_limit(2, 5), domain_error);
  try {
    m_ratio_finite(1, 3, 2);
    FAIL("expected a domain_error");
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()).find("requires r <= 2k") != std::string::npos);
  }
}

TEST_CASE("ratio as a polynomial in the matrix size") {
  for (long k = 1; k <= 4; ++k) {
    for (long r = 0; r <= 2 * k; ++r) {
      const PolyQ p = m_ratio_finite_polyN(k, r);
      CHECK(p.degree() == r);
      CHECK(p.leading() == m_ratio_limit(k, r));
      for (long N = 1; N <= 12; ++N) {
        CHECK(p.evaluate(Rat(N)) == m_ratio_finite(k, r, N));
      }
    }
  }
}

TEST_CASE("limit ratio functions of k, frozen coefficients") {
  const PolyQ den2 = P({q(-1, 4), Rat(0), Rat(1)});
  const PolyQ den4 = P({q(9, 16), Rat(0), q(-5, 2), Rat(0), Rat(1)});
  CHECK(m_ratio_limit_ratfunc(0) == RatFuncQ(Rat(1)));
  CHECK(m_ratio_limit_ratfunc(1) == RatFuncQ(q(1, 2)));
  CHECK(m_ratio_limit_ratfunc(2) == RatFuncQ(P({q(-1, 8), Rat(0), q(1, 4)}), den2));
  CHECK(m_ratio_limit_ratfunc(3) == RatFuncQ(P({q(-1, 8), Rat(0), q(1, 8)}), den2));
  CHECK(m_ratio_limit_ratfunc(4) ==
        RatFuncQ(P({q(33, 128), Rat(0), q(-1, 4), Rat(0), q(1, 16)}), den4));
  CHECK(m_ratio_limit_ratfunc(5) ==
        RatFuncQ(P({q(57, 256), Rat(0), q(-5, 32), Rat(0), q(1, 32)}), den4));
  CHECK(m_ratio_limit_ratfunc(2).render("k") == "(1/4*k^2 - 1/8) / (k^2 - 1/4)");
}

TEST_CASE("limit ratio function structure") {
  for (long r = 0; r <= 12; ++r) {
    const RatFuncQ f = m_ratio_limit_ratfunc(r);
    CHECK(f.num().is_even());
    CHECK(f.den().is_even());
    CHECK(f.den().leading() == 1);
    CHECK(f.num().degree() == f.den().degree());
    CHECK(f.num().leading() == rat_pow(q(1, 2), r));

    // Evaluating at admissible integer sizes reproduces the scalar limit.
    const long k_min = (r + 1) / 2;
    for (long k = std::max<long>(1, k_min); k <= k_min + 2; ++k) {
      CHECK(f.evaluate(Rat(k)) == m_ratio_limit(k, r));
    }

    // Every denominator root is a half-odd-integer +-j/2 with j < r: peel
    // them all off and nothing may remain.
    PolyQ quot = f.den();
    for (long j = 1; j < r; j += 2) {
      for (const long sign : {1L, -1L}) {
        const PolyQ factor = P({q(-sign * j, 2), Rat(1)});
        for (;;) {
          PolyQ div, rem;
          PolyQ::divrem(quot, factor, div, rem);
          if (!rem.is_zero()) break;
          quot = div;
        }
      }
    }
    CHECK(quot == PolyQ(Rat(1)));
  }
}

TEST_CASE("V moment spot values") {
  CHECK(v_moment_finite(2, 1, 1) == q(1, 2));
  CHECK(v_moment_finite(1, 1, 2) == 2);
  CHECK(v_moment_finite(2, 2, 3) == q(345, 8));
  CHECK(v_moment_finite(3, 2, 2) == 10);
  CHECK(v_moment_finite(1, 1, 5) == q(35, 2));
  CHECK(v_moment_finite(2, 1, 4) == 56);
  CHECK(v_moment_finite(1, 0, 7) == 8);
}

TEST_CASE("order zero V moment is the zeroth moment") {
  for (long k = 1; k <= 4; ++k) {
    for (long N = 1; N <= 4; ++N) {
      CHECK(v_moment_finite(k, 0, N) == moment_zero_finite(k, N));
    }
  }
}

TEST_CASE("V moment agrees with the trinomial expansion") {
  // |i*t + N/2 - x|^2 = (N/2)^2 - N*x + x^2 + t^2 on the support of the
  // angle measure, so the 2h-th absolute moment expands into a double
  // binomial sum over the plain ratios of order j + l.
  for (long k = 1; k <= 3; ++k) {
    for (long h = 0; h <= k; ++h) {
      for (long N = 1; N <= 4; ++N) {
        Rat sum(0);
        for (long j = 0; j <= h; ++j) {
          for (long l = 0; l <= j; ++l) {
            const Rat sign = l % 2 == 0 ? Rat(1) : Rat(-1);
            sum += C(h, j) * C(j, l) * rat_pow(q(-N * N, 4), h - j) *
                   rat_pow(Rat(N), j - l) * sign * m_ratio_finite(k, j + l, N);
          }
        }
        CHECK(v_moment_finite(k, h, N) == moment_zero_finite(k, N) * sum);
      }
    }
  }
}

TEST_CASE("V moment positivity and domain guards") {
  for (long k = 1; k <= 3; ++k) {
    for (long h = 0; h <= k; ++h) {
      for (long N = 1; N <= 5; ++N) {
        CHECK(v_moment_finite(k, h, N) > 0);
      }
    }
  }
  CHECK_THROWS_AS(v_moment_finite(2, 3, 1), domain_error);
  CHECK_THROWS_AS(v_moment_finite(0, 0, 1), domain_error);
  CHECK_THROWS_AS(v_moment_finite(1, -1, 1), domain_error);
  CHECK_THROWS_AS(v_moment_finite(1, 1, 0), domain_error);
}

TEST_CASE("V limit ratio functions of k") {
  const PolyQ den2 = P({q(-1, 4), Rat(0), Rat(1)});
  const PolyQ den4 = P({q(9, 16), Rat(0), q(-5, 2), Rat(0), Rat(1)});
  const PolyQ den6 = P({q(-25, 64), Rat(0), q(51, 16), Rat(0), q(-27, 4), Rat(0), Rat(1)});
  const PolyQ den10 = P({q(-11025, 1024), Rat(0), q(23941, 256), Rat(0), q(-7445, 32), Rat(0),
                         q(1029, 8), Rat(0), q(-85, 4), Rat(0), Rat(1)});
  CHECK(v_ratio_limit_ratfunc(0) == RatFuncQ(Rat(1)));
  CHECK(v_ratio_limit_ratfunc(1) == RatFuncQ(PolyQ(q(1, 16)), den2));
  CHECK(v_ratio_limit_ratfunc(2) == RatFuncQ(PolyQ(q(3, 256)), den4));
  CHECK(v_ratio_limit_ratfunc(3) == RatFuncQ(PolyQ(q(15, 4096)), den6));
  CHECK(v_ratio_limit_ratfunc(4) ==
        RatFuncQ(P({q(-3465, 262144), Rat(0), q(105, 65536)}), den10));

  // Structure law: the denominator outruns the numerator by exactly 2h and
  // the numerator leads with (2h)! / (h! * 2^(5h)).
  for (long h = 0; h <= 4; ++h) {
    const RatFuncQ f = v_ratio_limit_ratfunc(h);
    CHECK(f.num().is_even());
    CHECK(f.den().is_even());
    CHECK(f.den().leading() == 1);
    CHECK(f.den().degree() - f.num().degree() == 2 * h);
    const Rat lead = Rat(factorial(static_cast<unsigned long>(2 * h))) /
                     (Rat(factorial(static_cast<unsigned long>(h))) * rat_pow(Rat(2), 5 * h));
    CHECK(f.num().leading() == lead);
  }
  CHECK_THROWS_AS(v_ratio_limit_ratfunc(-1), domain_error);
}

TEST_CASE("zeroth moment values") {
  CHECK(moment_zero_finite(1, 2) == 3);
  CHECK(moment_zero_finite(2, 2) == 20);
  CHECK(moment_zero_finite(2, 3) == 50);
  CHECK(moment_zero_finite(3, 3) == 980);
  // At N = 1 the rectangle is a column and the value is a central binomial.
  for (long k = 1; k <= 8; ++k) {
    CHECK(moment_zero_finite(k, 1) == Rat(binomial(static_cast<unsigned long>(2 * k),
                                                   static_cast<unsigned long>(k))));
  }
  // The dual Schur / Barnes routes are compared internally on every call.
  for (long k = 1; k <= 8; ++k) {
    for (long N = 1; N <= 8; ++N) {
      CHECK(moment_zero_finite(k, N) > 0);
    }
  }
  CHECK(moment_zero_limit(1) == 1);
  CHECK(moment_zero_limit(2) == q(1, 12));
  CHECK(moment_zero_limit(3) == q(1, 8640));
  CHECK(moment_zero_limit(4) == q(1, 870912000));
  CHECK_THROWS_AS(moment_zero_finite(0, 1), domain_error);
  CHECK_THROWS_AS(moment_zero_finite(1, 0), domain_error);
  CHECK_THROWS_AS(moment_zero_limit(0), domain_error);
}

TEST_CASE("moment records carry the convention tag") {
  const MomentRecord a = make_record(MomentKind::m_ratio_finite, 2, 3, 4, q(9, 5));
  CHECK(a.k == 2);
  CHECK(a.r_or_2h == 3);
  CHECK(a.N == 4);
  CHECK(a.value == q(9, 5));
  CHECK(a.convention == std::string(kINormalizedTag));
  const MomentRecord b = make_record(MomentKind::m_ratio_limit, 2, 2, -1, q(7, 30));
  CHECK(b.convention == std::string(kINormalizedTag));
  CHECK(make_record(MomentKind::v_finite, 1, 2, 2, Rat(2)).convention == "real");
  CHECK(make_record(MomentKind::m_zero_finite, 2, 0, 2, Rat(20)).convention == "real");
}

TEST_CASE("hypergeometric layers of the exponential series") {
  const std::vector<Rat> exp_layers = hyper_layers({}, {}, 1, 5);
  const std::vector<Rat> want = {Rat(1), Rat(1), q(1, 2), q(1, 6), q(1, 24), q(1, 120)};
  CHECK(exp_layers == want);
}

TEST_CASE("hypergeometric layers, frozen general cases") {
  CHECK(hyper_layers({q(1, 2), q(1, 3)}, {q(1, 4)}, 2, 3) ==
        std::vector<Rat>{Rat(1), q(4, 3), q(196, 135), q(1856, 1215)});
  CHECK(hyper_layers({Rat(-2)}, {Rat(-4)}, 3, 6) ==
        std::vector<Rat>{Rat(1), q(3, 2), q(19, 20), q(3, 10), q(1, 20), q(1, 240), q(1, 7200)});
  // Terminating series: layers past the k-by-N box vanish identically.
  CHECK(hyper_layers({Rat(-1)}, {Rat(-2)}, 2, 4) ==
        std::vector<Rat>{Rat(1), Rat(1), q(1, 6), Rat(0), Rat(0)});
}

TEST_CASE("hypergeometric pole names the offending partition") {
  try {
    hyper_layers({Rat(1)}, {Rat(-2)}, 1, 3);
    FAIL("expected a domain_error");
  } catch (const domain_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("pole") != std::string::npos);
    CHECK(msg.find("(3)") != std::string::npos);
  }
  // The same lower parameter is harmless while the numerator terminates
  // first.
  CHECK_NOTHROW(hyper_layers({Rat(-1)}, {Rat(-2)}, 1, 5));
  CHECK_THROWS_AS(hyper_layers({}, {}, 0, 1), domain_error);
  CHECK_THROWS_AS(hyper_layers({}, {}, 1, -1), domain_error);
}

TEST_CASE("scalar value is the layer sum") {
  HyperParams p;
  p.upper = {q(1, 2), q(1, 3)};
  p.lower = {q(1, 4)};
  p.N = 2;
  p.z = q(2, 3);
  p.max_degree = 3;
  const std::vector<Rat> layers = hyper_layers(p.upper, p.lower, p.N, p.max_degree);
  Rat sum(0);
  for (size_t d = 0; d < layers.size(); ++d) {
    sum += rat_pow(p.z, static_cast<long>(d)) * layers[d];
  }
  CHECK(hyper_pfq_scalar(p) == sum);

  HyperParams e;
  e.N = 1;
  e.z = Rat(1);
  e.max_degree = 5;
  CHECK(hyper_pfq_scalar(e) == q(163, 60));
}

TEST_CASE("moment ratios form the confluent series coefficients") {
  for (long k = 1; k <= 3; ++k) {
    for (long N = 1; N <= 4; ++N) {
      const EgfCheckResult res = egf_check(k, N, 2 * k);
      CHECK(res.equal);
      CHECK(res.residuals.size() == static_cast<size_t>(2 * k + 1));
      for (const Rat& x : res.residuals) CHECK(x == 0);
    }
  }
  // The identity spelled out for one case.
  const std::vector<Rat> layers = hyper_layers({Rat(-2)}, {Rat(-4)}, 3, 4);
  for (long r = 0; r <= 4; ++r) {
    Rat want = m_ratio_finite(2, r, 3) / Rat(factorial(static_cast<unsigned long>(r)));
    CHECK(layers[static_cast<size_t>(r)] == want);
  }
  CHECK_THROWS_AS(egf_check(1, 1, 3), domain_error);
  CHECK_THROWS_AS(egf_check(1, 1, -1), domain_error);
  CHECK_THROWS_AS(egf_check(0, 1, 0), domain_error);
}
