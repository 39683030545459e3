#pragma once

#include <string>
#include <vector>

#include "semicat/rees.hpp"

namespace semicat {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail; // counts and witnesses, empty-free one-liner
  double elapsed_ms = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

// Suite names accepted by run_verify_suite; "all" chains every suite.
std::vector<std::string> verify_suite_names();

// Runs one named verification suite. Unknown names raise UnknownSuite.
SuiteResult run_verify_suite(const std::string &name);

// The shared instance corpus behind several suites: every regular sandwich
// matrix shape up to 3x3 over groups of order <= 4, structured families
// plus seeded random fill-ins; deterministic across runs.
std::vector<ReesMatrixSemigroup> verification_corpus();

} // namespace semicat
