#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corekit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exhaustive property sweeps up to n_max. Suites: hooks, bijection, sc7,
/// supernorm, all. Throws Errc::InvalidArgument for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, int n_max, unsigned threads = 0);

}  // namespace corekit
