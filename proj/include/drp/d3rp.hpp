#pragma once

#include "drp/engine.hpp"
#include "drp/report.hpp"

namespace drp {

struct D3rpConfig {
  double alpha = 0.0;          // learning rate; 0 is permitted but makes no progress
  std::size_t max_iters = 100;
  // Threshold on the max multiplier movement per iteration. Non-positive
  // selects the scale-free default 1e-9 * max(1, mean |value|).
  double tol = -1.0;
  bool stop_on_convergence = true;  // false: always run max_iters iterations
};

// Projected subgradient step on the multipliers:
// lambda_k' = max(lambda_k - alpha * (totals_k - bounds_k), 0).
DualState dual_update(const DualState& duals, std::span<const double> totals,
                      std::span<const double> bounds, double alpha);

double default_d3rp_tol(const GeneralProblem& problem);

// Learning-rate heuristic 1 / (N * mean |coef|); the supplied default for
// domain-compiled problems and the reference grid center elsewhere.
double heuristic_alpha(const GeneralProblem& problem);

// Greedy feasibility repair: deselects records in ascending value-per-unit-
// of-violation-relief order until no constraint is violated. Returns the
// repaired selection; its feasible flag stays false when repair cannot help.
Selection repair_selection(const GeneralProblem& problem, Selection sel);

// Dual descent with a fixed learning rate, starting from zero multipliers.
// Non-convergence is reported, never thrown.
SolveResult solve_d3rp(const GeneralProblem& problem, const D3rpConfig& cfg,
                       const ShardPlan& plan, Executor& exec);

}  // namespace drp
