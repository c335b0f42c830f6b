// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#include "polynomial.hpp"

#include <sstream>

namespace um {

PolyQ::PolyQ(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::variable() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat PolyQ::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

Rat PolyQ::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return PolyQ(std::move(r));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + b * Rat(-1); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(r));
}

PolyQ operator*(const PolyQ& a, const Rat& s) {
  if (s == 0) return PolyQ();
  std::vector<Rat> r = a.c_;
  for (auto& x : r) x *= s;
  return PolyQ(std::move(r));
}

Rat PolyQ::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void PolyQ::divrem(const PolyQ& p, const PolyQ& q, PolyQ& quot, PolyQ& rem) {
  if (q.is_zero()) throw domain_error("polynomial division by zero");
  std::vector<Rat> r = p.c_;
  const long dq = q.degree();
  std::vector<Rat> qt;
  if (p.degree() >= dq) qt.assign(static_cast<size_t>(p.degree() - dq) + 1, Rat(0));
  while (static_cast<long>(r.size()) - 1 >= dq && !r.empty()) {
    const long d = static_cast<long>(r.size()) - 1 - dq;
    const Rat c = r.back() / q.c_.back();
    qt[static_cast<size_t>(d)] = c;
    for (size_t i = 0; i < q.c_.size(); ++i) r[static_cast<size_t>(d) + i] -= c * q.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  quot = PolyQ(std::move(qt));
  rem = PolyQ(std::move(r));
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return PolyQ();
  return *this * (Rat(1) / c_.back());
}

bool PolyQ::is_even() const {
  for (size_t i = 1; i < c_.size(); i += 2) {
    if (c_[i] != 0) return false;
  }
  return true;
}

std::string PolyQ::render(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rat c = coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace um
