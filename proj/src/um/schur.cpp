// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "schur.hpp"

namespace um {

Rat det_exact(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw domain_error("det_exact requires a square matrix");
  }
  Rat d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    const Rat inv = Rat(1) / m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rat f = m[r][c] * inv;
      for (size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

Rat schur_eval_ones(const Partition& lam, long k) {
  if (k < 0) throw domain_error("schur_eval_ones requires k >= 0");
  if (lam.length() > k) return Rat(0);
  Rat v = poch_up(Rat(k), lam);
  return v / Rat(hook_number(lam));
}

namespace {

// h_0..h_maxdeg of the point set, by absorbing one variable at a time:
// with x added, h_m becomes h_m + x * h_{m-1} (new h, in place, ascending m).
std::vector<Rat> complete_homogeneous(const std::vector<Rat>& pt, long maxdeg) {
  std::vector<Rat> h(static_cast<size_t>(maxdeg) + 1, Rat(0));
  h[0] = Rat(1);
  for (const Rat& x : pt) {
    for (long m = 1; m <= maxdeg; ++m) {
      h[static_cast<size_t>(m)] += x * h[static_cast<size_t>(m - 1)];
    }
  }
  return h;
}

}  // namespace

Rat schur_eval(const Partition& lam, const std::vector<Rat>& pt) {
  const long l = lam.length();
  if (l == 0) return Rat(1);
  if (static_cast<long>(pt.size()) < l) {
    throw domain_error("schur_eval: point has fewer coordinates than l(lam)");
  }
  const long maxdeg = lam.parts()[0] + l - 1;
  const std::vector<Rat> h = complete_homogeneous(pt, maxdeg);
  auto H = [&](long m) { return m < 0 ? Rat(0) : h[static_cast<size_t>(m)]; };
  std::vector<std::vector<Rat>> m(static_cast<size_t>(l), std::vector<Rat>(static_cast<size_t>(l)));
  for (long i = 1; i <= l; ++i) {
    for (long j = 1; j <= l; ++j) {
      m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          H(lam.parts()[static_cast<size_t>(i - 1)] - i + j);
    }
  }
  return det_exact(std::move(m));
}

Rat h_star_rect(long r, long k, long N) {
  if (k < 0 || N < 0) throw domain_error("h_star_rect requires k, N >= 0");
  if (r < 0) return Rat(0);
  if (r == 0) return Rat(1);
  // h_r(1^k) counts multisets: binomial(k + r - 1, r).
  const Int hr = binomial(static_cast<unsigned long>(k + r - 1), static_cast<unsigned long>(r));
  return fall(Rat(N), r) * Rat(hr);
}

namespace {

Rat shifted_schur_rect_det(const Partition& mu, long k, long N, long R) {
  if (R == 0) return Rat(1);
  std::vector<std::vector<Rat>> m(static_cast<size_t>(R), std::vector<Rat>(static_cast<size_t>(R)));
  for (long i = 1; i <= R; ++i) {
    for (long j = 1; j <= R; ++j) {
      m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          h_star_rect(mu.part(static_cast<size_t>(i - 1)) - i + j, k, N + j - 1);
    }
  }
  return det_exact(std::move(m));
}

}  // namespace

Rat shifted_schur_rect(const Partition& mu, long k, long N) {
  if (k < 0 || N < 0) throw domain_error("shifted_schur_rect requires k, N >= 0");
  const Rat h = Rat(hook_number(mu));
  const Rat a = h * schur_eval_ones(conjugate(mu), N) * schur_eval_ones(mu, k);
  const long sign = mu.size() % 2 == 0 ? 1 : -1;
  const Rat b = Rat(sign) * poch_up(Rat(-N), mu) * poch_up(Rat(k), mu) / h;
  const Rat c = shifted_schur_rect_det(mu, k, N, mu.length());
  if (a != b || b != c) {
    throw internal_error("shifted_schur_rect: routes disagree for mu = " + mu.to_string() +
                         ", k = " + std::to_string(k) + ", N = " + std::to_string(N));
  }
#ifndef NDEBUG
  const Rat c2 = shifted_schur_rect_det(mu, k, N, mu.length() + 1);
  if (c2 != c) {
    throw internal_error("shifted_schur_rect: determinant not stable at R+1 for mu = " +
                         mu.to_string());
  }
#endif
  return a;
}

BinomialCheckResult binomial_check(long k, long N, long n, const std::vector<Rat>& pt) {
  if (k < 1 || N < 1) throw domain_error("binomial_check requires k, N >= 1");
  if (n < N) throw domain_error("binomial_check requires n >= N");
  if (static_cast<long>(pt.size()) != n) {
    throw domain_error("binomial_check: point must have exactly n coordinates");
  }
  const Partition lam(std::vector<long>(static_cast<size_t>(N), k));

  std::vector<Rat> shifted;
  shifted.reserve(pt.size());
  for (const Rat& x : pt) shifted.push_back(x + 1);
  const Rat lhs = schur_eval(lam, shifted) / schur_eval_ones(lam, n);

  // The evaluation point of the shifted Schur factor is lam itself padded
  // with zeros, i.e. N copies of k, hence the swapped (N, k) arguments.
  Rat rhs(0);
  for (long sz = 0; sz <= k * N; ++sz) {
    for (const Partition& mu : enumerate_partitions(sz)) {
      if (mu.length() > 0 && (mu.parts()[0] > k || mu.length() > N)) continue;
      rhs += shifted_schur_rect(mu, N, k) * schur_eval(mu, pt) / poch_up(Rat(n), mu);
    }
  }
  BinomialCheckResult res;
  res.lhs = lhs;
  res.rhs = rhs;
  res.residual = lhs - rhs;
  res.equal = res.residual == 0;
  return res;
}

}  // namespace um
