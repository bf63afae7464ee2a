#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drp/lagrangian.hpp"

namespace drp {

// One row per executed iteration (D3RP) or sweep (CD2RP). The evaluation
// belongs to the multipliers recorded in the row.
struct TraceEntry {
  std::size_t iteration = 0;  // 1-based
  double dual_value = 0.0;
  double primal_value = 0.0;
  bool feasible = false;
  std::optional<double> relative_gap;  // set only for feasible iterates
  std::vector<double> slack;           // constraint totals minus bounds
  std::vector<double> lambdas;
};

struct PhaseTimings {
  double map_ms = 0.0;         // decision-rule evaluations
  double candidates_ms = 0.0;  // candidate construction (CD2RP)
  double search_ms = 0.0;      // binary-search probes (CD2RP)
  double update_ms = 0.0;      // multiplier updates and bookkeeping
  double total_ms = 0.0;
};

struct SolveReport {
  std::string algo;
  std::size_t iterations = 0;
  bool converged = false;
  bool final_feasible = false;
  bool best_feasible_found = false;
  bool repaired = false;
  double best_feasible_primal = 0.0;  // meaningful when best_feasible_found
  std::vector<TraceEntry> trace;
  PhaseTimings timings;
  std::size_t shard_count = 1;
};

struct SolveResult {
  DualState duals;      // final multipliers
  Selection selection;  // evaluated at the final multipliers
  // Best-primal feasible iterate seen during the run, or the repaired
  // selection when no iterate was feasible. Unset if neither exists.
  std::optional<Selection> best_feasible;
  SolveReport report;
};

// Smallest dual value across the trace; a valid optimum upper bound since
// every iterate's dual value is one.
std::optional<double> best_dual_bound(const SolveReport& report);

}  // namespace drp
