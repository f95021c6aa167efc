#pragma once

#include <string>
#include <vector>

namespace affhecke {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::string detail;  // first failure, if any
  double seconds = 0;
};

/// Module names accepted by run_suites besides "all".
std::vector<std::string> suite_names();

/// Quick invariant sweeps over small windows, one result per module.
/// Throws InvalidArgument for an unknown name.
std::vector<SuiteResult> run_suites(const std::string& which);

}  // namespace affhecke
