#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ergodyn {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<CriterionResult> acceptance_criteria();

// Prints one PASS/FAIL line per criterion; true when all pass.
bool run_acceptance(std::ostream& out);

}  // namespace ergodyn
