// The verification suite behind both the acceptance test binary and the
// command-line `selftest` subcommand: twelve exact checks covering the
// quasitriangular identities, cobrackets, the canonical preconnection, the
// curvature dichotomy, moduli dimensions, the flat reference chart, the
// randomized centrality/symmetry and braiding properties, the matrix-chart
// bracket and calculi, the dual-route obstruction cross-check, and report
// determinism.  All comparisons are exact (tolerance zero).
#pragma once

#include <string>
#include <vector>

namespace semiclass {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed; short diagnosis otherwise
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const {
    for (const auto& c : criteria)
      if (!c.passed) return false;
    return true;
  }
};

// Runs every criterion unconditionally (a failure in one does not stop the
// others) and returns the per-criterion outcomes in order.
AcceptanceReport run_acceptance_suite();

}  // namespace semiclass
