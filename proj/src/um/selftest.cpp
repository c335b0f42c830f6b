// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "selftest.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <sstream>

#include "error.hpp"
#include "haar.hpp"
#include "hypergeom.hpp"
#include "moments.hpp"
#include "partition.hpp"
#include "philox.hpp"
#include "rational.hpp"
#include "schur.hpp"

namespace um {

namespace {

Rat q(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string partition_enumeration(bool full) {
  const struct {
    long n;
    size_t count;
  } table[] = {{0, 1}, {1, 1}, {5, 7}, {10, 42}, {20, 627}};
  for (const auto& row : table) {
    const auto parts = enumerate_partitions(row.n);
    if (parts.size() != row.count) {
      std::ostringstream os;
      os << "p(" << row.n << ") = " << parts.size() << ", want " << row.count;
      return os.str();
    }
    if (row.n >= 1) {
      if (parts.front().length() != 1 || parts.front().part(0) != row.n)
        return "first partition is not the single row";
      if (parts.back().length() != row.n) return "last partition is not the single column";
    }
  }
  if (full && enumerate_partitions(30).size() != 5604) return "p(30) != 5604";
  return {};
}

std::string partition_conjugation(bool full) {
  const long max_n = full ? 12 : 8;
  for (long n = 0; n <= max_n; ++n) {
    for (const Partition& lam : enumerate_partitions(n)) {
      if (!(conjugate(conjugate(lam)) == lam))
        return "conjugation is not an involution at " + lam.to_string();
      auto h1 = hook_lengths(lam);
      auto h2 = hook_lengths(conjugate(lam));
      std::sort(h1.begin(), h1.end());
      std::sort(h2.begin(), h2.end());
      if (h1 != h2) return "hook multiset changed under conjugation at " + lam.to_string();
      // Contents negate cell-by-cell under conjugation, so
      // x poch mu^t = (-1)^|mu| * ((-x) poch mu).
      const Rat x = q(5, 3);
      Rat lhs = poch_up(x, conjugate(lam));
      Rat rhs = poch_up(-x, lam);
      if (n % 2 == 1) rhs = -rhs;
      if (lhs != rhs) return "pochhammer conjugation identity failed at " + lam.to_string();
    }
  }
  return {};
}

std::string dimension_square_sum(bool full) {
  const long max_n = full ? 12 : 8;
  for (long n = 1; n <= max_n; ++n) {
    Int total = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
      const Int d = dim_sym(lam);
      total += d * d;
    }
    if (total != factorial(static_cast<unsigned long>(n))) {
      std::ostringstream os;
      os << "sum of squared dimensions at n = " << n << " is " << total.get_str();
      return os.str();
    }
  }
  return {};
}

std::string plancherel_normalization(bool full) {
  const long max_n = full ? 30 : 12;
  for (long n = 1; n <= max_n; ++n) {
    Rat total = 0;
    for (const Partition& lam : enumerate_partitions(n)) total += plancherel_weight(lam);
    if (total != 1) {
      std::ostringstream os;
      os << "plancherel weights at n = " << n << " sum to " << rat_to_string(total);
      return os.str();
    }
  }
  return {};
}

std::string pochhammer_splitting(bool) {
  // (N + a - 1) fall (a + b) = (N rise a) * ((N - 1) fall b); the negative-
  // count convention exists precisely to keep this true for b < 0.
  const Rat xs[] = {Rat(6), Rat(11), q(7, 2), q(-9, 4)};
  for (const Rat& x : xs) {
    for (long a = 0; a <= 5; ++a) {
      for (long b = -4; b <= 4; ++b) {
        const Rat lhs = fall(x + a - 1, a + b);
        const Rat rhs = rise(x, a) * fall(x - 1, b);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "splitting failed at x = " << rat_to_string(x) << ", a = " << a << ", b = " << b;
          return os.str();
        }
      }
    }
  }
  return {};
}

std::string barnes_recurrence(bool) {
  for (long n = 2; n <= 40; ++n) {
    if (barnes_g(n + 1) != factorial(static_cast<unsigned long>(n - 1)) * barnes_g(n)) {
      std::ostringstream os;
      os << "G(n+1) != (n-1)! G(n) at n = " << n;
      return os.str();
    }
  }
  return {};
}

std::string schur_hook_content(bool full) {
  const long max_n = full ? 8 : 6;
  const long max_k = full ? 6 : 5;
  for (long n = 0; n <= max_n; ++n) {
    for (const Partition& lam : enumerate_partitions(n)) {
      for (long k = std::max<long>(1, lam.length()); k <= max_k; ++k) {
        const std::vector<Rat> ones(static_cast<size_t>(k), Rat(1));
        if (schur_eval(lam, ones) != schur_eval_ones(lam, k))
          return "hook-content and determinant disagree at " + lam.to_string();
      }
    }
  }
  return {};
}

std::string shifted_schur_vanishing(bool full) {
  const long max_n = full ? 7 : 5;
  const long max_kn = full ? 5 : 4;
  for (long n = 1; n <= max_n; ++n) {
    for (const Partition& mu : enumerate_partitions(n)) {
      for (long k = 1; k <= max_kn; ++k) {
        for (long N = 1; N <= max_kn; ++N) {
          const Rat v = shifted_schur_rect(mu, k, N);  // cross-checks three routes internally
          const bool outside = mu.part(0) > N || mu.length() > k;
          if (outside != (v == 0)) {
            std::ostringstream os;
            os << "vanishing pattern wrong at " << mu.to_string() << ", k = " << k
               << ", N = " << N;
            return os.str();
          }
        }
      }
    }
  }
  return {};
}

std::string binomial_series(bool full) {
  const std::vector<Rat> points = {q(1, 2), q(-1, 3), q(2, 5), q(-1, 7), q(3, 4), q(-2, 3)};
  const long max_kn = full ? 3 : 2;
  const long max_n = full ? 6 : 4;
  for (long k = 1; k <= max_kn; ++k) {
    for (long N = 1; N <= max_kn; ++N) {
      for (long n = N; n <= max_n; ++n) {
        const std::vector<Rat> pt(points.begin(), points.begin() + n);
        const BinomialCheckResult res = binomial_check(k, N, n, pt);
        if (!res.equal) {
          std::ostringstream os;
          os << "expansion mismatch at k = " << k << ", N = " << N << ", n = " << n
             << ", residual " << rat_to_string(res.residual);
          return os.str();
        }
      }
    }
  }
  return {};
}

std::string moment_frozen_values(bool) {
  if (m_ratio_finite(1, 1, 4) != 2) return "m_ratio_finite(1,1,4) != 2";
  if (m_ratio_finite(2, 3, 3) != q(9, 5)) return "m_ratio_finite(2,3,3) != 9/5";
  if (m_ratio_limit(2, 4) != q(11, 280)) return "m_ratio_limit(2,4) != 11/280";
  if (v_moment_finite(2, 1, 1) != q(1, 2)) return "v_moment_finite(2,1,1) != 1/2";
  if (v_moment_finite(2, 2, 3) != q(345, 8)) return "v_moment_finite(2,2,3) != 345/8";
  if (moment_zero_finite(3, 3) != 980) return "moment_zero_finite(3,3) != 980";
  if (moment_zero_limit(4) != q(1, 870912000)) return "moment_zero_limit(4) != 1/870912000";
  return {};
}

std::string moment_poly_consistency(bool full) {
  const long max_k = full ? 4 : 3;
  for (long k = 1; k <= max_k; ++k) {
    for (long r = 0; r <= 2 * k; ++r) {
      const PolyQ p = m_ratio_finite_polyN(k, r);
      if (p.degree() != r) return "poly degree mismatch";
      if (p.leading() != m_ratio_limit(k, r))
        return "leading coefficient is not the large-N limit";
      for (long N = 1; N <= r + 2; ++N) {
        if (p.evaluate(Rat(N)) != m_ratio_finite(k, r, N))
          return "polynomial disagrees with the direct sum";
      }
    }
  }
  return {};
}

std::string ratio_function_structure(bool full) {
  const long max_r = full ? 10 : 8;
  for (long r = 0; r <= max_r; ++r) {
    const RatFuncQ f = m_ratio_limit_ratfunc(r);
    if (!f.num().is_even() || !f.den().is_even()) return "ratio function is not even in k";
    if (f.num().degree() != f.den().degree()) return "numerator/denominator degree gap";
    if (f.num().leading() != rat_pow(Rat(2), -r)) return "large-k limit is not 2^-r";
    for (long k = (r + 1) / 2; k <= (r + 1) / 2 + 2; ++k) {
      if (k < 1) continue;
      if (f.evaluate(Rat(k)) != m_ratio_limit(k, r)) return "symbolic/numeric mismatch";
    }
  }
  const long max_h = full ? 4 : 3;
  for (long h = 0; h <= max_h; ++h) {
    const RatFuncQ v = v_ratio_limit_ratfunc(h);
    if (v.den().degree() - v.num().degree() != 2 * h)
      return "V-ratio degree gap is not 2h";
    Rat c(factorial(static_cast<unsigned long>(2 * h)));
    c /= Rat(factorial(static_cast<unsigned long>(h))) * rat_pow(Rat(2), 5 * h);
    if (v.num().leading() != c)
      return "V-ratio leading coefficient disagrees with (2h)!/(h! 2^{5h})";
  }
  {
    // Full closed form at h = 1: 1 / (4 (4k^2 - 1)).
    const RatFuncQ v1 = v_ratio_limit_ratfunc(1);
    const RatFuncQ want(PolyQ(q(1, 16)), PolyQ(std::vector<Rat>{q(-1, 4), Rat(0), Rat(1)}));
    if (!(v1 == want)) return "V-ratio at h = 1 is not 1/(4(4k^2-1))";
  }
  return {};
}

std::string egf_consistency(bool full) {
  const long max_k = full ? 3 : 2;
  const long max_n = full ? 4 : 3;
  for (long k = 1; k <= max_k; ++k) {
    for (long N = 1; N <= max_n; ++N) {
      const EgfCheckResult res = egf_check(k, N, 2 * k);
      if (!res.equal) {
        std::ostringstream os;
        os << "generating function mismatch at k = " << k << ", N = " << N;
        return os.str();
      }
      // Support bound: layers of the (-k; -2k) series vanish past k*N.
      const long deg = k * N + 3;
      const auto layers = hyper_layers({Rat(-k)}, {Rat(-2 * k)}, N, deg);
      for (long d = k * N + 1; d <= deg; ++d) {
        if (layers[static_cast<size_t>(d)] != 0) {
          std::ostringstream os;
          os << "layer " << d << " nonzero beyond the k*N support at k = " << k << ", N = " << N;
          return os.str();
        }
      }
    }
  }
  return {};
}

std::string rng_reference(bool) {
  // First two NumPy Philox4x64-10 blocks for key (0, 0).
  const std::uint64_t want0[4] = {0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL,
                                  0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL};
  const std::uint64_t want1[4] = {0x809bf322883987c3ULL, 0x471128b9e807f7ddULL,
                                  0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
  RandomStream stream(0, 0);
  for (int i = 0; i < 4; ++i) {
    if (stream.next_u64() != want0[i]) return "block 0 deviates from the reference stream";
  }
  for (int i = 0; i < 4; ++i) {
    if (stream.next_u64() != want1[i]) return "block 1 deviates from the reference stream";
  }
  return {};
}

std::string mc_smoke(bool full) {
  const unsigned long long n = full ? 20000 : 4000;
  const McEstimate a = estimate_m_moment(1, 0, 2, n, 20260814, 1);
  if (a.resampled != 0) return "degenerate draws in a tiny run";
  // Order zero is the ratio of the zeroth moment to itself: mean 1.
  if (std::abs(a.mean_real - 1.0) > 6 * a.std_error) return "order-0 mean off by > 6 SE";
  if (std::abs(a.mean_imag) > 1e-12) return "order-0 statistic has an imaginary part";
  const McEstimate b = estimate_m_moment(1, 0, 2, n, 20260814, 3);
  if (std::memcmp(&a.mean_real, &b.mean_real, sizeof(double)) != 0 ||
      std::memcmp(&a.std_error, &b.std_error, sizeof(double)) != 0) {
    return "estimate depends on the thread count";
  }
  return {};
}

}  // namespace

std::vector<SelfTestResult> run_selftest(bool full) {
  const struct {
    const char* name;
    std::string (*fn)(bool);
  } checks[] = {
      {"partition-enumeration", partition_enumeration},
      {"partition-conjugation", partition_conjugation},
      {"dimension-square-sum", dimension_square_sum},
      {"plancherel-normalization", plancherel_normalization},
      {"pochhammer-splitting", pochhammer_splitting},
      {"barnes-recurrence", barnes_recurrence},
      {"schur-hook-content", schur_hook_content},
      {"shifted-schur-vanishing", shifted_schur_vanishing},
      {"binomial-series", binomial_series},
      {"moment-frozen-values", moment_frozen_values},
      {"moment-poly-consistency", moment_poly_consistency},
      {"ratio-function-structure", ratio_function_structure},
      {"egf-consistency", egf_consistency},
      {"rng-reference", rng_reference},
      {"mc-smoke", mc_smoke},
  };
  std::vector<SelfTestResult> out;
  out.reserve(std::size(checks));
  for (const auto& c : checks) {
    SelfTestResult r;
    r.name = c.name;
    try {
      r.detail = c.fn(full);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace um
