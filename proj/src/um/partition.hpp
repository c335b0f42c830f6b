// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace um {

// Weakly decreasing sequence of positive integers. The empty partition is
// the unique partition of 0. Cells are 1-based (row, col), English layout.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);  // validates; throws domain_error

  const std::vector<long>& parts() const { return parts_; }
  long size() const;                           // sum of parts
  long length() const { return static_cast<long>(parts_.size()); }
  long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0-based, 0 beyond

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::string to_string() const;  // "(3,1,1)", "()" for empty

 private:
  std::vector<long> parts_;
};

inline constexpr long kPartitionEnumerationLimit = 200;

// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
// Throws capacity_error when n exceeds the limit (the guard exists because
// p(n) grows subexponentially; p(60) = 966467 is still fine, p(200) is not).
std::vector<Partition> enumerate_partitions(long n, long limit = kPartitionEnumerationLimit);

Partition conjugate(const Partition& lam);

// Content c(cell) = col - row, row-major; |lam| entries.
std::vector<long> contents(const Partition& lam);

// Hook length per cell, row-major; hook_number is their product.
std::vector<long> hook_lengths(const Partition& lam);
Int hook_number(const Partition& lam);

// Number of standard Young tableaux: |lam|! / hook_number. The divisibility
// is asserted; failure means the hook computation is broken.
Int dim_sym(const Partition& lam);

// Plancherel measure weight |lam|! / hook_number^2.
Rat plancherel_weight(const Partition& lam);

// Generalized Pochhammer x raised by mu: product of (x + content) over cells.
Rat poch_up(const Rat& x, const Partition& mu);

// Scalar rising/falling factorials with the negative-count convention
//   x rise (-m) = x fall (-m) = 1 / ((x+1) rise m),
// which makes (N+a-1) fall (a+b) = (N rise a) * ((N-1) fall b) hold for all
// integer a >= 0 and any integer b. Throws domain_error when the reciprocal
// case divides by zero.
Rat rise(const Rat& x, long m);
Rat fall(const Rat& x, long m);

// poch_up with a symbolic first argument: product of (scale*k + content)
// as a polynomial in k. Degree |mu|, integer coefficients.
PolyQ poch_poly(long scale, const Partition& mu);

}  // namespace um
