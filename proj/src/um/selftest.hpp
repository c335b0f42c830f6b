// Copyright 2026 The unimoments authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace um {

struct SelfTestResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success, diagnostic on failure
};

// Cross-module consistency sweeps, each exercising an identity that two
// independent code paths must agree on. `full` widens the ranges and adds
// a small Monte Carlo smoke check; the quick set finishes in well under a
// second. Never throws: failures (including unexpected exceptions) are
// reported in the result list.
std::vector<SelfTestResult> run_selftest(bool full);

}  // namespace um
