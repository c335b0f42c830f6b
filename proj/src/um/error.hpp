// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace um {

// Error taxonomy shared by the core, the C API and the CLI. The numeric
// codes double as C API error codes and CLI exit codes:
//   1 usage, 2 domain, 3 internal inconsistency, 4 capacity.
class error : public std::runtime_error {
 public:
  error(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

struct usage_error : error {
  explicit usage_error(const std::string& m) : error(1, m) {}
};

// Parameter outside the mathematical domain of an operation (bad range,
// pole, dimension mismatch, unparsable literal).
struct domain_error : error {
  explicit domain_error(const std::string& m) : error(2, m) {}
};

// Two routes that must agree exactly disagreed; signals a bug, not bad input.
struct internal_error : error {
  explicit internal_error(const std::string& m) : error(3, m) {}
};

// Request exceeds a configured size guard.
struct capacity_error : error {
  explicit capacity_error(const std::string& m) : error(4, m) {}
};

}  // namespace um
