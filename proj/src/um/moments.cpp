// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "moments.hpp"

#include "schur.hpp"

namespace um {

MomentRecord make_record(MomentKind kind, long k, long r_or_2h, long N, Rat value) {
  const bool ratio = kind == MomentKind::m_ratio_finite || kind == MomentKind::m_ratio_limit;
  return MomentRecord{kind, k, r_or_2h, N, std::move(value), ratio ? kINormalizedTag : "real"};
}

namespace {

void require_m_domain(long k, long r) {
  if (k < 1) throw domain_error("moment ratio requires k >= 1");
  if (r < 0) throw domain_error("moment ratio requires r >= 0");
  if (r > 2 * k) throw domain_error("moment ratio requires r <= 2k");
}

}  // namespace

Rat m_ratio_finite(long k, long r, long N) {
  require_m_domain(k, r);
  if (N < 1) throw domain_error("m_ratio_finite requires N >= 1");
  const Int rfact = factorial(static_cast<unsigned long>(r));
  Rat acc(0);
  for (const Partition& mu : enumerate_partitions(r)) {
    const Int h = hook_number(mu);
    Rat w(rfact, h * h);
    w.canonicalize();
    acc += w * poch_up(Rat(N), mu) * poch_up(Rat(-k), mu) / poch_up(Rat(-2 * k), mu);
  }
  return acc;
}

Rat m_ratio_limit(long k, long r) {
  require_m_domain(k, r);
  const Int rfact = factorial(static_cast<unsigned long>(r));
  Rat acc(0);
  for (const Partition& mu : enumerate_partitions(r)) {
    const Int h = hook_number(mu);
    Rat w(rfact, h * h);
    w.canonicalize();
    acc += w * poch_up(Rat(k), mu) / poch_up(Rat(2 * k), mu);
  }
  return acc;
}

RatFuncQ m_ratio_limit_ratfunc(long r) {
  if (r < 0) throw domain_error("m_ratio_limit_ratfunc requires r >= 0");
  const Int rfact = factorial(static_cast<unsigned long>(r));
  RatFuncQ acc;
  for (const Partition& mu : enumerate_partitions(r)) {
    const Int h = hook_number(mu);
    Rat w(rfact, h * h);
    w.canonicalize();
    acc = acc + RatFuncQ(poch_poly(1, mu), poch_poly(2, mu)) * w;
  }
  return acc;
}

PolyQ m_ratio_finite_polyN(long k, long r) {
  require_m_domain(k, r);
  const Int rfact = factorial(static_cast<unsigned long>(r));
  PolyQ acc;
  for (const Partition& mu : enumerate_partitions(r)) {
    const Int h = hook_number(mu);
    Rat w(rfact, h * h);
    w.canonicalize();
    w *= poch_up(Rat(-k), mu) / poch_up(Rat(-2 * k), mu);
    acc = acc + poch_poly(1, mu) * w;  // poch_poly in the size variable
  }
  return acc;
}

Rat moment_zero_finite(long k, long N) {
  if (k < 1 || N < 1) throw domain_error("moment_zero_finite requires k, N >= 1");
  const Partition rect(std::vector<long>(static_cast<size_t>(k), N));
  const Rat via_hooks = schur_eval_ones(rect, 2 * k);
  Rat via_barnes(barnes_g(N + 2 * k + 1) * barnes_g(N + 1) * barnes_g(k + 1) * barnes_g(k + 1),
                 barnes_g(N + k + 1) * barnes_g(N + k + 1) * barnes_g(2 * k + 1));
  via_barnes.canonicalize();
  if (via_hooks != via_barnes) {
    throw internal_error("moment_zero_finite: hook-content and Barnes routes disagree at k = " +
                         std::to_string(k) + ", N = " + std::to_string(N));
  }
  return via_hooks;
}

Rat moment_zero_limit(long k) {
  if (k < 1) throw domain_error("moment_zero_limit requires k >= 1");
  Rat v(barnes_g(k + 1) * barnes_g(k + 1), barnes_g(2 * k + 1));
  v.canonicalize();
  return v;
}

namespace {

// Exact complex rational, just enough for the integrity check below.
struct RatC {
  Rat re, im;
};

RatC mul(const RatC& a, const RatC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RatC unit_i_pow(long e) {  // i^e for any integer e
  long m = ((e % 4) + 4) % 4;
  switch (m) {
    case 0: return {Rat(1), Rat(0)};
    case 1: return {Rat(0), Rat(1)};
    case 2: return {Rat(-1), Rat(0)};
    default: return {Rat(0), Rat(-1)};
  }
}

}  // namespace

// The 2h-th absolute moment of V'/V weighted by |V|^2k expands binomially:
//   |V|_N(2k, 2h) = sum_{i=0}^{2h} C(2h,i) (M)_N(2k,i) (iN/2)^{2h-i}.
// Writing the raw (M)_N(2k,i) as m_i * i^(-i) * M0 with m_i the stored
// real i-normalized ratio, the i-powers combine to i^(2h-2i) = (-1)^(h-i),
// so the whole sum collapses to the real expression
//   M0 * sum_i C(2h,i) (-1)^(h-i) (N/2)^(2h-i) m_i.
// We evaluate the collapsed form, re-evaluate the raw complex sum with
// exact complex rationals, and require the two to agree with zero
// imaginary part; any discrepancy is a sign bookkeeping bug.
Rat v_moment_finite(long k, long h, long N) {
  if (k < 1) throw domain_error("v_moment_finite requires k >= 1");
  if (h < 0) throw domain_error("v_moment_finite requires h >= 0");
  if (h > k) throw domain_error("v_moment_finite requires h <= k");
  if (N < 1) throw domain_error("v_moment_finite requires N >= 1");

  const Rat m0 = moment_zero_finite(k, N);
  Rat half_n(N, 2);
  half_n.canonicalize();

  Rat collapsed(0);
  RatC raw{Rat(0), Rat(0)};
  for (long i = 0; i <= 2 * h; ++i) {
    const Rat mi = m_ratio_finite(k, i, N);
    const Rat c = Rat(binomial(static_cast<unsigned long>(2 * h), static_cast<unsigned long>(i)));
    const long sign = (h - i) % 2 == 0 ? 1 : -1;
    collapsed += c * Rat(sign) * rat_pow(half_n, 2 * h - i) * mi;

    const RatC raw_moment = mul({mi, Rat(0)}, unit_i_pow(-i));
    RatC in_half = mul(unit_i_pow(2 * h - i), {rat_pow(half_n, 2 * h - i), Rat(0)});
    RatC term = mul(raw_moment, in_half);
    term.re *= c;
    term.im *= c;
    raw.re += term.re;
    raw.im += term.im;
  }
  collapsed *= m0;
  raw.re *= m0;
  raw.im *= m0;
  if (raw.im != 0 || raw.re != collapsed) {
    throw internal_error("v_moment_finite: complex route left a residue at k = " +
                         std::to_string(k) + ", h = " + std::to_string(h) +
                         ", N = " + std::to_string(N));
  }
  if (collapsed < 0) {
    throw internal_error("v_moment_finite: negative value for an absolute moment");
  }
  return collapsed;
}

// Same collapse in the large-N normalization: the (iN/2) powers become
// (i/2) powers and each m_i becomes the symbolic limit ratio R_i(k).
RatFuncQ v_ratio_limit_ratfunc(long h) {
  if (h < 0) throw domain_error("v_ratio_limit_ratfunc requires h >= 0");
  RatFuncQ acc;
  const Rat half(1, 2);
  for (long i = 0; i <= 2 * h; ++i) {
    const Rat c = Rat(binomial(static_cast<unsigned long>(2 * h), static_cast<unsigned long>(i)));
    const long sign = (h - i) % 2 == 0 ? 1 : -1;
    acc = acc + m_ratio_limit_ratfunc(i) * (c * Rat(sign) * rat_pow(half, 2 * h - i));
  }
  return acc;
}

}  // namespace um
