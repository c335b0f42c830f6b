// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "rational.hpp"

namespace um {

namespace {

Int int_from_string(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw domain_error("invalid integer literal '" + s + "'");
  }
  return v;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  Int num, den = 1;
  if (slash == std::string::npos) {
    num = int_from_string(s);
  } else {
    num = int_from_string(s.substr(0, slash));
    den = int_from_string(s.substr(slash + 1));
  }
  if (den == 0) throw domain_error("zero denominator in rational literal '" + s + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) { return x.get_str(); }

double rat_to_double(const Rat& x) { return x.get_d(); }

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0 && e < 0) throw domain_error("rat_pow: 0 raised to a negative power");
  Rat base = e > 0 ? x : Rat(1) / x;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Int factorial(unsigned long n) {
  Int v;
  mpz_fac_ui(v.get_mpz_t(), n);
  return v;
}

Int binomial(unsigned long n, unsigned long k) {
  Int v;
  mpz_bin_uiui(v.get_mpz_t(), n, k);
  return v;
}

Int barnes_g(long n) {
  if (n <= 0) throw domain_error("barnes_g requires a positive integer argument");
  Int g = 1;
  for (long i = 1; i <= n - 2; ++i) g *= factorial(static_cast<unsigned long>(i));
  return g;
}

}  // namespace um
