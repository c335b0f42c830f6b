// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace um {

// Dense univariate polynomial over Rat, coefficients in ascending degree.
// Invariant: the coefficient vector is empty (the zero polynomial) or its
// last entry is nonzero.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const Rat& constant);  // NOLINT: implicit by design, scalars promote
  explicit PolyQ(std::vector<Rat> coeffs);

  static PolyQ variable();  // the monomial x

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  Rat coeff(long i) const;                                          // 0 outside range
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const;  // 0 for the zero polynomial

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const Rat& s);
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  Rat evaluate(const Rat& x) const;

  // p = q * quot + rem with deg rem < deg q. Throws domain_error for q == 0.
  static void divrem(const PolyQ& p, const PolyQ& q, PolyQ& quot, PolyQ& rem);
  // Monic gcd; gcd(0, 0) = 0.
  static PolyQ gcd(PolyQ a, PolyQ b);

  PolyQ monic() const;
  bool is_even() const;  // all odd-degree coefficients vanish

  std::string render(const std::string& var) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace um
