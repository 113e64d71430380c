#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lgm {

/// Outcome of one exhaustive invariant sweep.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;        // number of instances examined
  std::string counterexample;   // first failure, empty when passed

  void fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
  }
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace lgm
