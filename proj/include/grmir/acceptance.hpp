#pragma once

#include <string>
#include <vector>

namespace grmir {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the acceptance battery: exact cross-checks of the series engines,
// the vertex-coefficient limits, the congruence checks, and the polytope
// facts, each with a wall-clock ceiling that is part of the verdict.
std::vector<CriterionResult> run_acceptance();

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace grmir
