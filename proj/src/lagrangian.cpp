#include "drp/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace drp {

namespace detail {

void check_dims(const GeneralProblem& problem, const DualState& duals) {
  if (duals.lambdas.size() != problem.num_constraints()) {
    throw std::invalid_argument(
        "multiplier count " + std::to_string(duals.lambdas.size()) +
        " does not match constraint count " +
        std::to_string(problem.num_constraints()));
  }
  for (double l : duals.lambdas) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw std::invalid_argument("multipliers must be finite and >= 0");
    }
  }
}

namespace {

struct EvalCtx {
  const double* values;
  const double* coefs;
  const double* lambdas;
  std::size_t l;
};

void evaluate_leaf(const EvalCtx& ctx, std::size_t begin, std::size_t end,
                   std::uint8_t* x, double* acc) {
  const std::size_t l = ctx.l;
  for (std::size_t i = begin; i < end; ++i) {
    const double* row = ctx.coefs + i * l;
    const double ac = adjusted_cost_raw(ctx.values[i], row, ctx.lambdas, l);
    const bool sel = ac > 0.0;
    x[i] = sel ? 1 : 0;
    if (sel) {
      acc[0] += ctx.values[i];
      acc[1] += 1.0;
      for (std::size_t k = 0; k < l; ++k) acc[2 + k] += row[k];
    }
  }
}

void evaluate_tree(const EvalCtx& ctx, std::size_t begin, std::size_t end,
                   std::uint8_t* x, double* acc) {
  const std::size_t width = ctx.l + 2;
  if (end - begin <= kSumLeafSize) {
    std::fill(acc, acc + width, 0.0);
    evaluate_leaf(ctx, begin, end, x, acc);
    return;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  evaluate_tree(ctx, begin, mid, x, acc);
  double rhs[kMaxTupleWidth];
  evaluate_tree(ctx, mid, end, x, rhs);
  for (std::size_t w = 0; w < width; ++w) acc[w] += rhs[w];
}

template <typename PerRecord>
double scalar_tree(const PerRecord& fn, std::size_t begin, std::size_t end) {
  if (end - begin <= kSumLeafSize) {
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += fn(i);
    return acc;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return scalar_tree(fn, begin, mid) + scalar_tree(fn, mid, end);
}

}  // namespace

void evaluate_range(const GeneralProblem& problem,
                    std::span<const double> lambdas, std::size_t begin,
                    std::size_t end, std::uint8_t* x, double* acc) {
  EvalCtx ctx{problem.values().data(), problem.coef_data(), lambdas.data(),
              problem.num_constraints()};
  evaluate_tree(ctx, begin, end, x, acc);
}

double positive_part_range(const GeneralProblem& problem,
                           std::span<const double> lambdas, std::size_t begin,
                           std::size_t end) {
  const double* values = problem.values().data();
  const double* coefs = problem.coef_data();
  const double* lam = lambdas.data();
  const std::size_t l = problem.num_constraints();
  return scalar_tree(
      [&](std::size_t i) {
        const double ac = adjusted_cost_raw(values[i], coefs + i * l, lam, l);
        return ac > 0.0 ? ac : 0.0;
      },
      begin, end);
}

double constraint_total_range(const GeneralProblem& problem,
                              std::span<const double> lambdas, std::size_t k,
                              std::size_t begin, std::size_t end) {
  const double* values = problem.values().data();
  const double* coefs = problem.coef_data();
  const double* lam = lambdas.data();
  const std::size_t l = problem.num_constraints();
  return scalar_tree(
      [&](std::size_t i) {
        const double* row = coefs + i * l;
        const double ac = adjusted_cost_raw(values[i], row, lam, l);
        return ac > 0.0 ? row[k] : 0.0;
      },
      begin, end);
}

}  // namespace detail

double adjusted_cost(const TrafficRecord& rec, const DualState& duals) {
  if (rec.coef.size() != duals.lambdas.size()) {
    throw std::invalid_argument(
        "record " + rec.id + ": coefficient count " +
        std::to_string(rec.coef.size()) + " does not match multiplier count " +
        std::to_string(duals.lambdas.size()));
  }
  return detail::adjusted_cost_raw(rec.value, rec.coef.data(),
                                   duals.lambdas.data(), rec.coef.size());
}

bool decide(const TrafficRecord& rec, const DualState& duals) {
  return adjusted_cost(rec, duals) > 0.0;
}

Selection evaluate(const GeneralProblem& problem, const DualState& duals) {
  detail::check_dims(problem, duals);
  const std::size_t n = problem.num_records();
  const std::size_t l = problem.num_constraints();

  Selection sel;
  sel.selected.resize(n);
  double acc[detail::kMaxTupleWidth];
  detail::evaluate_range(problem, duals.lambdas, 0, n, sel.selected.data(),
                         acc);
  sel.primal_value = acc[0];
  sel.selected_count = static_cast<std::size_t>(acc[1]);
  sel.constraint_totals.assign(acc + 2, acc + 2 + l);
  sel.feasible = true;
  for (std::size_t k = 0; k < l; ++k) {
    if (sel.constraint_totals[k] < problem.bounds()[k]) {
      sel.feasible = false;
      break;
    }
  }
  return sel;
}

double dual_value(const GeneralProblem& problem, const DualState& duals) {
  detail::check_dims(problem, duals);
  double relaxed = detail::positive_part_range(problem, duals.lambdas, 0,
                                               problem.num_records());
  double penalty = 0.0;
  for (std::size_t k = 0; k < problem.num_constraints(); ++k) {
    penalty += duals.lambdas[k] * problem.bounds()[k];
  }
  return relaxed - penalty;
}

GapReport duality_gap(const GeneralProblem& problem, const DualState& duals,
                      const Selection& sel) {
  if (!sel.feasible) {
    throw std::invalid_argument("gap undefined for infeasible primal");
  }
  GapReport report;
  report.dual_value = dual_value(problem, duals);
  report.primal_value = sel.primal_value;
  report.gap = report.dual_value - report.primal_value;
  if (report.primal_value > 0.0) {
    report.relative_gap = report.gap / report.primal_value;
  }
  return report;
}

}  // namespace drp
