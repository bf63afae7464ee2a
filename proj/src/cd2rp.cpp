#include "drp/cd2rp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace drp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::vector<double> shard_roots(const GeneralProblem& problem,
                                std::span<const double> lambdas, std::size_t k,
                                const ShardRange& range) {
  const std::size_t l = problem.num_constraints();
  const double* values = problem.values().data();
  const double* coefs = problem.coef_data();
  std::vector<double> roots;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    const double* row = coefs + i * l;
    const double ck = row[k];
    if (ck == 0.0) continue;  // no root in this coordinate
    double base = values[i];
    for (std::size_t j = 0; j < l; ++j) {
      if (j != k) base += lambdas[j] * row[j];
    }
    const double root = -base / ck;
    if (root > 0.0 && std::isfinite(root)) roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void quantile_sample(std::vector<double>& sorted, std::size_t sample_size) {
  if (sample_size == 0 || sorted.size() <= sample_size) return;
  std::vector<double> kept;
  kept.reserve(sample_size);
  const std::size_t m = sorted.size();
  for (std::size_t j = 0; j < sample_size; ++j) {
    const std::size_t idx =
        sample_size == 1 ? 0 : j * (m - 1) / (sample_size - 1);
    kept.push_back(sorted[idx]);
  }
  sorted = std::move(kept);
}

}  // namespace

CandidateSet candidates(const GeneralProblem& problem, const DualState& duals,
                        std::size_t k, const ShardPlan& plan, Executor& exec,
                        CandidateMode mode, std::size_t sample_size) {
  detail::check_dims(problem, duals);
  if (k >= problem.num_constraints()) {
    throw std::invalid_argument("constraint index out of range");
  }

  const std::size_t shards = plan.shard_count();
  std::vector<std::vector<double>> locals(shards);
  auto build = [&](std::size_t s) {
    locals[s] = shard_roots(problem, duals.lambdas, k, plan.ranges()[s]);
    if (mode == CandidateMode::kSampled) quantile_sample(locals[s], sample_size);
  };
  if (exec.workers() > 1 && shards > 1 && plan.total() >= 8192) {
    exec.run(shards, build);
  } else {
    for (std::size_t s = 0; s < shards; ++s) build(s);
  }

  std::vector<double> merged = std::move(locals[0]);
  for (std::size_t s = 1; s < shards; ++s) {
    std::vector<double> next;
    next.reserve(merged.size() + locals[s].size());
    std::merge(merged.begin(), merged.end(), locals[s].begin(),
               locals[s].end(), std::back_inserter(next));
    merged = std::move(next);
  }
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  merged.insert(merged.begin(), 0.0);

  return CandidateSet{k, std::move(merged)};
}

CandidateSet candidates(const GeneralProblem& problem, const DualState& duals,
                        std::size_t k) {
  Executor serial(1);
  return candidates(problem, duals, k,
                    ShardPlan::balanced(problem.num_records(), 1), serial);
}

CoordinateResult dual_binary_search(const GeneralProblem& problem,
                                    const DualState& duals, std::size_t k,
                                    const CandidateSet& cands,
                                    const ShardPlan& plan, Executor& exec) {
  if (cands.values.empty()) {
    throw std::invalid_argument("empty candidate set");
  }
  const double bound = problem.bounds()[k];
  DualState probe = duals;

  std::size_t lo = 0;
  std::size_t hi = cands.values.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    probe.lambdas[k] = cands.values[mid];
    const double total = constraint_total(problem, probe, k, plan, exec);
    if (total < bound) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }

  probe.lambdas[k] = cands.values[hi];
  CoordinateResult result;
  result.lambda = cands.values[hi];
  result.selection = map_reduce(problem, probe, plan, exec);
  if (result.selection.constraint_totals[k] < bound) {
    throw std::runtime_error("coordinate infeasible: constraint " +
                             std::to_string(k) + " cannot reach its bound");
  }
  return result;
}

SolveResult solve_cd2rp(const GeneralProblem& problem, const Cd2rpConfig& cfg,
                        const ShardPlan& plan, Executor& exec) {
  if (cfg.max_sweeps < 1) {
    throw std::invalid_argument("max_sweeps must be >= 1");
  }
  if (!(cfg.tol >= 0.0)) {
    throw std::invalid_argument("tol must be >= 0");
  }

  const auto start = Clock::now();
  const std::size_t l = problem.num_constraints();

  SolveResult result;
  result.report.algo = "cd2rp";
  result.report.shard_count = plan.shard_count();
  result.duals.lambdas.assign(l, 0.0);

  Selection current;
  for (std::size_t sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    double movement = 0.0;
    for (std::size_t k = 0; k < l; ++k) {
      const auto cand_start = Clock::now();
      CandidateSet cands =
          candidates(problem, result.duals, k, plan, exec,
                     cfg.candidate_mode, cfg.sample_size);
      result.report.timings.candidates_ms += ms_since(cand_start);

      const auto search_start = Clock::now();
      CoordinateResult coord =
          dual_binary_search(problem, result.duals, k, cands, plan, exec);
      result.report.timings.search_ms += ms_since(search_start);

      movement =
          std::max(movement, std::fabs(coord.lambda - result.duals.lambdas[k]));
      result.duals.lambdas[k] = coord.lambda;
      current = std::move(coord.selection);
    }
    result.duals.iteration = sweep;
    result.report.iterations = sweep;

    const auto map_start = Clock::now();
    const double dual = dual_value(problem, result.duals, plan, exec);
    result.report.timings.map_ms += ms_since(map_start);

    TraceEntry entry;
    entry.iteration = sweep;
    entry.dual_value = dual;
    entry.primal_value = current.primal_value;
    entry.feasible = current.feasible;
    if (current.feasible && current.primal_value > 0.0) {
      entry.relative_gap = (dual - current.primal_value) / current.primal_value;
    }
    entry.slack.resize(l);
    for (std::size_t k = 0; k < l; ++k) {
      entry.slack[k] = current.constraint_totals[k] - problem.bounds()[k];
    }
    entry.lambdas = result.duals.lambdas;
    result.report.trace.push_back(std::move(entry));

    if (current.feasible &&
        (!result.best_feasible ||
         current.primal_value > result.best_feasible->primal_value)) {
      result.best_feasible = current;
    }

    if (cfg.stop_on_convergence && movement < cfg.tol) {
      result.report.converged = true;
      break;
    }
  }

  result.selection = std::move(current);
  result.report.final_feasible = result.selection.feasible;
  if (result.best_feasible) {
    result.report.best_feasible_found = true;
    result.report.best_feasible_primal = result.best_feasible->primal_value;
  }
  result.report.timings.total_ms = ms_since(start);
  return result;
}

}  // namespace drp
