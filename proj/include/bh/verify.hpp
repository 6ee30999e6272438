#pragma once
// Named verification suites shared by the CLI and the acceptance binary.

#include <string>
#include <vector>

namespace bh {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample on failure, summary otherwise
  double seconds = 0;
};

// Fixed order; "all" is accepted by run_suite but not listed.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws MathError("usage", ...) for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace bh
