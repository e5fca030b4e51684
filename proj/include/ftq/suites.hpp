#pragma once

#include <string>
#include <vector>

namespace ftq {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named verification suites: "paper", "axioms", "spans". Each check catches
/// its own errors and reports them as failures.
std::vector<CheckResult> run_suite(const std::string& suite);

std::vector<std::string> suite_names();

}  // namespace ftq
