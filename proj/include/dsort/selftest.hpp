#pragma once

#include <span>
#include <string>
#include <vector>

namespace dsort {

struct SuiteResult {
  std::string name;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<std::string> selftest_suite_names();

// Runs the named suites, or all of them when `only` is empty. Throws
// std::invalid_argument for an unknown suite name.
std::vector<SuiteResult> run_selftest(std::span<const std::string> only = {});

}  // namespace dsort
