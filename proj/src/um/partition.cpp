// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "partition.hpp"

#include <sstream>

namespace um {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw domain_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw domain_error("partition parts must be weakly decreasing");
    }
  }
}

long Partition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> enumerate_partitions(long n, long limit) {
  if (n < 0) throw domain_error("enumerate_partitions requires n >= 0");
  if (n > limit) {
    throw capacity_error("enumerate_partitions: n = " + std::to_string(n) +
                         " exceeds the enumeration limit " + std::to_string(limit));
  }
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard reverse-lexicographic successor: shrink the rightmost part
  // that exceeds 1, then repack the freed units greedily.
  std::vector<long> cur{n};
  for (;;) {
    out.emplace_back(Partition(cur));
    long idx = static_cast<long>(cur.size()) - 1;
    long ones = 0;
    while (idx >= 0 && cur[idx] == 1) {
      ++ones;
      --idx;
    }
    if (idx < 0) break;
    const long x = cur[idx] - 1;
    long rem = cur[idx] + ones;
    cur.resize(static_cast<size_t>(idx));
    while (rem > 0) {
      const long p = rem < x ? rem : x;
      cur.push_back(p);
      rem -= p;
    }
  }
  return out;
}

Partition conjugate(const Partition& lam) {
  if (lam.length() == 0) return Partition();
  std::vector<long> t(static_cast<size_t>(lam.parts()[0]), 0);
  for (long p : lam.parts()) {
    for (long j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
  }
  return Partition(std::move(t));
}

std::vector<long> contents(const Partition& lam) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(lam.size()));
  for (long i = 0; i < lam.length(); ++i) {
    for (long j = 1; j <= lam.parts()[static_cast<size_t>(i)]; ++j) out.push_back(j - (i + 1));
  }
  return out;
}

std::vector<long> hook_lengths(const Partition& lam) {
  const Partition t = conjugate(lam);
  std::vector<long> out;
  out.reserve(static_cast<size_t>(lam.size()));
  for (long i = 1; i <= lam.length(); ++i) {
    const long row = lam.parts()[static_cast<size_t>(i - 1)];
    for (long j = 1; j <= row; ++j) {
      const long col = t.parts()[static_cast<size_t>(j - 1)];
      out.push_back(row - j + col - i + 1);
    }
  }
  return out;
}

Int hook_number(const Partition& lam) {
  Int h = 1;
  for (long x : hook_lengths(lam)) h *= x;
  return h;
}

Int dim_sym(const Partition& lam) {
  const Int h = hook_number(lam);
  const Int f = factorial(static_cast<unsigned long>(lam.size()));
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t(), h.get_mpz_t());
  if (r != 0) {
    throw internal_error("dim_sym: |lam|! not divisible by the hook number for " +
                         lam.to_string());
  }
  return q;
}

Rat plancherel_weight(const Partition& lam) {
  const Int h = hook_number(lam);
  Rat w(factorial(static_cast<unsigned long>(lam.size())), h * h);
  w.canonicalize();
  return w;
}

Rat poch_up(const Rat& x, const Partition& mu) {
  Rat acc(1);
  for (long c : contents(mu)) acc *= x + Rat(c);
  return acc;
}

Rat rise(const Rat& x, long m) {
  if (m >= 0) {
    Rat acc(1);
    for (long i = 0; i < m; ++i) acc *= x + Rat(i);
    return acc;
  }
  const Rat d = rise(x + 1, -m);
  if (d == 0) throw domain_error("rise: zero factor in the negative-count reciprocal");
  return Rat(1) / d;
}

Rat fall(const Rat& x, long m) {
  if (m >= 0) {
    Rat acc(1);
    for (long i = 0; i < m; ++i) acc *= x - Rat(i);
    return acc;
  }
  return rise(x, m);  // the two conventions coincide for negative counts
}

PolyQ poch_poly(long scale, const Partition& mu) {
  if (scale == 0) throw domain_error("poch_poly requires a nonzero scale");
  PolyQ acc{Rat(1)};
  for (long c : contents(mu)) {
    acc = acc * PolyQ(std::vector<Rat>{Rat(c), Rat(scale)});
  }
  return acc;
}

}  // namespace um
