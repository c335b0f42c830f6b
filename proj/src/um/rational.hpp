// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace um {

// Exact scalars. mpq_class keeps values canonical (reduced, positive
// denominator, 0/1 for zero), which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" (base 10, optional leading '-'). Canonicalizes.
// Throws domain_error on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical rendering: "p/q", or plain "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

double rat_to_double(const Rat& x);

// x^e for integer e (negative allowed; throws domain_error on 0^negative).
Rat rat_pow(const Rat& x, long e);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// Barnes G at positive integers: G(1) = G(2) = G(3) = 1 and
// G(n) = prod_{i=1}^{n-2} i!, so G(n+1) = (n-1)! G(n).
// Throws domain_error for n <= 0.
Int barnes_g(long n);

}  // namespace um
