// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "rational_function.hpp"

namespace um {

RatFuncQ::RatFuncQ(const PolyQ& num, const PolyQ& den) {
  if (den.is_zero()) throw domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = PolyQ();
    den_ = PolyQ(Rat(1));
    return;
  }
  const PolyQ g = PolyQ::gcd(num, den);
  PolyQ n, d, r;
  PolyQ::divrem(num, g, n, r);
  PolyQ::divrem(den, g, d, r);
  const Rat lc = d.leading();
  num_ = n * (Rat(1) / lc);
  den_ = d * (Rat(1) / lc);
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const Rat& s) { return RatFuncQ(a.num_ * s, a.den_); }

Rat RatFuncQ::evaluate(const Rat& x) const {
  const Rat d = den_.evaluate(x);
  if (d == 0) throw domain_error("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::string RatFuncQ::render(const std::string& var) const {
  if (is_zero()) return "0";
  if (den_.degree() == 0) return num_.render(var);
  return "(" + num_.render(var) + ") / (" + den_.render(var) + ")";
}

}  // namespace um
