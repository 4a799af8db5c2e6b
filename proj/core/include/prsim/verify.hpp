#pragma once

#include <string>
#include <vector>

#include "prsim/web_graph.hpp"

namespace prsim {

struct CheckResult {
  std::string name;
  bool skipped = false;
  bool passed = false;
  double max_error = 0.0;
  std::string detail;
};

/// Runs the matrix-identity battery against one graph: average-matrix closed
/// forms, rescaled-damping identities and fixed points for both schemes, the
/// pattern-average brute force, initiator-class sums, frozen-block norm and
/// Neumann checks, and the ergodicity-coefficient bounds. Checks whose dense
/// constructions do not fit the graph size are reported as skipped.
std::vector<CheckResult> run_verification(const WebGraph& g, double m,
                                          std::uint64_t seed = 0);

}  // namespace prsim
