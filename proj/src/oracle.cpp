#include "drp/oracle.hpp"

#include <stdexcept>
#include <string>

namespace drp {

namespace {

// Lexicographic order on assignments read as (x_0, x_1, ...), false < true.
bool lex_less(std::uint32_t a, std::uint32_t b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned bit_a = (a >> i) & 1u;
    const unsigned bit_b = (b >> i) & 1u;
    if (bit_a != bit_b) return bit_a < bit_b;
  }
  return false;
}

}  // namespace

OracleResult exhaustive(const GeneralProblem& problem) {
  const std::size_t n = problem.num_records();
  const std::size_t l = problem.num_constraints();
  if (n > kMaxExhaustiveRecords) {
    throw std::invalid_argument("instance too large for exhaustive oracle: " +
                                std::to_string(n) + " records");
  }

  const double* values = problem.values().data();
  const double* coefs = problem.coef_data();
  const auto& bounds = problem.bounds();

  bool found = false;
  double best_value = 0.0;
  std::uint32_t best_mask = 0;
  std::size_t feasible_count = 0;

  const std::uint64_t limit = 1ULL << n;
  double totals[kMaxConstraints];
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double primal = 0.0;
    for (std::size_t k = 0; k < l; ++k) totals[k] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        primal += values[i];
        const double* row = coefs + i * l;
        for (std::size_t k = 0; k < l; ++k) totals[k] += row[k];
      }
    }
    bool feasible = true;
    for (std::size_t k = 0; k < l; ++k) {
      if (totals[k] < bounds[k]) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    ++feasible_count;
    const auto m = static_cast<std::uint32_t>(mask);
    if (!found || primal > best_value ||
        (primal == best_value && lex_less(m, best_mask, n))) {
      found = true;
      best_value = primal;
      best_mask = m;
    }
  }

  if (!found) throw std::runtime_error("infeasible instance");

  OracleResult result;
  result.opt_value = best_value;
  result.feasible_count = feasible_count;
  result.opt_x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.opt_x[i] = (best_mask >> i) & 1u;
  }
  return result;
}

double optimality_ratio(const GeneralProblem& problem, double algo_value) {
  return algo_value / exhaustive(problem).opt_value;
}

double optimality_ratio(const GeneralProblem& problem, double algo_value,
                        const DualState& duals) {
  if (problem.num_records() <= kMaxExhaustiveRecords) {
    return optimality_ratio(problem, algo_value);
  }
  return algo_value / dual_value(problem, duals);
}

}  // namespace drp
