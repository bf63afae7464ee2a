#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drp/problem.hpp"

namespace drp {

// Nonnegative multipliers, one per constraint, plus the iteration that
// produced them.
struct DualState {
  std::vector<double> lambdas;
  std::size_t iteration = 0;
};

// Result of evaluating the decision rule over a whole problem.
struct Selection {
  std::vector<std::uint8_t> selected;      // 0/1 per record
  double primal_value = 0.0;               // sum of selected values
  std::vector<double> constraint_totals;   // sum of selected coefficients per k
  std::size_t selected_count = 0;
  bool feasible = false;                   // totals[k] >= bounds[k] for all k
};

struct GapReport {
  double dual_value = 0.0;
  double primal_value = 0.0;
  double gap = 0.0;
  // gap / primal; unset when the primal value is not positive.
  std::optional<double> relative_gap;
};

// value + dot(lambdas, coef). The dot product is accumulated first and added
// to the value in one final operation; reserve pricing mirrors this order to
// keep the sell boundary exact.
double adjusted_cost(const TrafficRecord& rec, const DualState& duals);

// Sell decision: adjusted cost strictly positive. Exactly zero is reserved.
bool decide(const TrafficRecord& rec, const DualState& duals);

// Applies the decision rule to every record and accumulates the primal value
// and constraint totals. Serial reference path; the engine provides the
// sharded equivalent.
Selection evaluate(const GeneralProblem& problem, const DualState& duals);

// max over x of the relaxed objective at fixed multipliers:
// sum_i max(0, adjusted_cost_i) - dot(lambdas, bounds).
double dual_value(const GeneralProblem& problem, const DualState& duals);

// Requires a feasible selection; gap = dual - primal.
GapReport duality_gap(const GeneralProblem& problem, const DualState& duals,
                      const Selection& sel);

namespace detail {

inline double adjusted_cost_raw(double value, const double* coef,
                                const double* lambdas, std::size_t l) {
  double dot = 0.0;
  for (std::size_t k = 0; k < l; ++k) dot += lambdas[k] * coef[k];
  return value + dot;
}

// Widest per-record tuple the reducers handle: primal + count + one lane per
// constraint.
inline constexpr std::size_t kMaxTupleWidth = kMaxConstraints + 2;
inline constexpr std::size_t kSumLeafSize = 256;

// Evaluates records in [begin, end): writes decisions into x (indexed
// globally) and pairwise-sums the tuple [primal, count, totals...] into acc.
void evaluate_range(const GeneralProblem& problem,
                    std::span<const double> lambdas, std::size_t begin,
                    std::size_t end, std::uint8_t* x, double* acc);

// Pairwise sum of max(0, adjusted cost) over [begin, end).
double positive_part_range(const GeneralProblem& problem,
                           std::span<const double> lambdas, std::size_t begin,
                           std::size_t end);

// Pairwise sum of coef_ik over selected records in [begin, end). Produces
// the same bits as lane k of evaluate_range.
double constraint_total_range(const GeneralProblem& problem,
                              std::span<const double> lambdas, std::size_t k,
                              std::size_t begin, std::size_t end);

void check_dims(const GeneralProblem& problem, const DualState& duals);

}  // namespace detail
}  // namespace drp
