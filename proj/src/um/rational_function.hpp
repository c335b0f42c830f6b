// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "polynomial.hpp"

namespace um {

// Quotient of PolyQ kept in a unique canonical form: gcd(num, den) = 1 and
// den monic, so equality of values is structural equality. Zero is 0/1.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(Rat(1)) {}
  RatFuncQ(const PolyQ& num, const PolyQ& den);  // reduces; throws on den == 0
  RatFuncQ(const Rat& constant) : RatFuncQ(PolyQ(constant), PolyQ(Rat(1))) {}  // NOLINT

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const Rat& s);
  bool operator==(const RatFuncQ& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Throws domain_error when x is a pole (den(x) = 0).
  Rat evaluate(const Rat& x) const;

  std::string render(const std::string& var) const;

 private:
  PolyQ num_, den_;
};

}  // namespace um
