#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hbtool {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double tolerance = 0.0;
  std::string note;
};

// Cross-checks closed forms, the recurrence and the structured solver
// against the dense oracle. Results come back in a fixed order.
std::vector<CheckResult> run_verify_suite(std::uint64_t seed);

}  // namespace hbtool
