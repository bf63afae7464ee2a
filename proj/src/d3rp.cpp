#include "drp/d3rp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace drp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

TraceEntry make_trace_entry(const GeneralProblem& problem,
                            const DualState& duals, const Selection& sel,
                            double dual, std::size_t iteration) {
  TraceEntry entry;
  entry.iteration = iteration;
  entry.dual_value = dual;
  entry.primal_value = sel.primal_value;
  entry.feasible = sel.feasible;
  if (sel.feasible && sel.primal_value > 0.0) {
    entry.relative_gap = (dual - sel.primal_value) / sel.primal_value;
  }
  entry.slack.resize(problem.num_constraints());
  for (std::size_t k = 0; k < problem.num_constraints(); ++k) {
    entry.slack[k] = sel.constraint_totals[k] - problem.bounds()[k];
  }
  entry.lambdas = duals.lambdas;
  return entry;
}

void track_best(const Selection& sel, std::optional<Selection>& best) {
  if (!sel.feasible) return;
  if (!best || sel.primal_value > best->primal_value) best = sel;
}

}  // namespace

DualState dual_update(const DualState& duals, std::span<const double> totals,
                      std::span<const double> bounds, double alpha) {
  if (totals.size() != duals.lambdas.size() ||
      bounds.size() != duals.lambdas.size()) {
    throw std::invalid_argument("dual update dimension mismatch");
  }
  DualState next = duals;
  for (std::size_t k = 0; k < next.lambdas.size(); ++k) {
    const double stepped =
        duals.lambdas[k] - alpha * (totals[k] - bounds[k]);
    next.lambdas[k] = stepped > 0.0 ? stepped : 0.0;
  }
  next.iteration = duals.iteration + 1;
  return next;
}

double default_d3rp_tol(const GeneralProblem& problem) {
  return 1e-9 * std::max(1.0, problem.mean_abs_value());
}

double heuristic_alpha(const GeneralProblem& problem) {
  const double mean = problem.mean_abs_coef();
  const double n = static_cast<double>(problem.num_records());
  return mean > 0.0 ? 1.0 / (n * mean) : 1.0 / n;
}

Selection repair_selection(const GeneralProblem& problem, Selection sel) {
  const std::size_t n = problem.num_records();
  const std::size_t l = problem.num_constraints();
  const auto& bounds = problem.bounds();

  auto violated = [&](std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t k = 0; k < l; ++k) {
      if (sel.constraint_totals[k] < bounds[k]) out.push_back(k);
    }
  };

  std::vector<std::size_t> bad;
  violated(bad);
  // Dropping a record flips the sign of its contribution, so only records
  // with negative coefficients on violated constraints can help. Rebuild the
  // ranking when the violated set changes; each round removes at least one
  // record, so at most l + 1 rounds matter.
  for (std::size_t round = 0; round <= l && !bad.empty(); ++round) {
    struct Choice {
      double ratio;
      std::size_t index;
    };
    std::vector<Choice> order;
    for (std::size_t i = 0; i < n; ++i) {
      if (!sel.selected[i]) continue;
      const auto row = problem.coefs(i);
      double relief = 0.0;
      for (std::size_t k : bad) {
        if (row[k] < 0.0) relief -= row[k];
      }
      if (relief > 0.0) {
        order.push_back({problem.value(i) / relief, i});
      }
    }
    if (order.empty()) break;
    std::sort(order.begin(), order.end(), [](const Choice& a, const Choice& b) {
      return a.ratio != b.ratio ? a.ratio < b.ratio : a.index < b.index;
    });
    for (const auto& choice : order) {
      bool still_violated = false;
      for (std::size_t k : bad) {
        if (sel.constraint_totals[k] < bounds[k]) {
          still_violated = true;
          break;
        }
      }
      if (!still_violated) break;
      const std::size_t i = choice.index;
      sel.selected[i] = 0;
      sel.selected_count -= 1;
      sel.primal_value -= problem.value(i);
      const auto row = problem.coefs(i);
      for (std::size_t k = 0; k < l; ++k) sel.constraint_totals[k] -= row[k];
    }
    violated(bad);
  }

  sel.feasible = bad.empty();
  return sel;
}

SolveResult solve_d3rp(const GeneralProblem& problem, const D3rpConfig& cfg,
                       const ShardPlan& plan, Executor& exec) {
  if (!(cfg.alpha >= 0.0) || !std::isfinite(cfg.alpha)) {
    throw std::invalid_argument("alpha must be finite and >= 0");
  }
  if (cfg.max_iters < 1) {
    throw std::invalid_argument("max_iters must be >= 1");
  }
  const double tol =
      cfg.tol > 0.0 ? cfg.tol : default_d3rp_tol(problem);

  const auto start = Clock::now();
  SolveResult result;
  result.report.algo = "d3rp";
  result.report.shard_count = plan.shard_count();
  result.duals.lambdas.assign(problem.num_constraints(), 0.0);

  for (std::size_t t = 1; t <= cfg.max_iters; ++t) {
    const auto map_start = Clock::now();
    Selection sel = map_reduce(problem, result.duals, plan, exec);
    const double dual = dual_value(problem, result.duals, plan, exec);
    result.report.timings.map_ms += ms_since(map_start);

    const auto update_start = Clock::now();
    result.report.trace.push_back(
        make_trace_entry(problem, result.duals, sel, dual, t));
    track_best(sel, result.best_feasible);

    DualState next = dual_update(result.duals, sel.constraint_totals,
                                 problem.bounds(), cfg.alpha);
    double movement = 0.0;
    for (std::size_t k = 0; k < next.lambdas.size(); ++k) {
      movement = std::max(
          movement, std::fabs(next.lambdas[k] - result.duals.lambdas[k]));
    }
    result.duals = std::move(next);
    result.report.iterations = t;
    result.report.timings.update_ms += ms_since(update_start);

    if (cfg.stop_on_convergence && movement < tol) {
      result.report.converged = true;
      break;
    }
  }

  const auto map_start = Clock::now();
  result.selection = map_reduce(problem, result.duals, plan, exec);
  result.report.timings.map_ms += ms_since(map_start);
  track_best(result.selection, result.best_feasible);
  result.report.final_feasible = result.selection.feasible;

  if (!result.best_feasible) {
    Selection repaired = repair_selection(problem, result.selection);
    if (repaired.feasible) {
      result.best_feasible = std::move(repaired);
      result.report.repaired = true;
    }
  }
  if (result.best_feasible) {
    result.report.best_feasible_found = true;
    result.report.best_feasible_primal = result.best_feasible->primal_value;
  }
  result.report.timings.total_ms = ms_since(start);
  return result;
}

}  // namespace drp
