#pragma once

#include <cstdint>
#include <vector>

#include "drp/lagrangian.hpp"
#include "drp/problem.hpp"

namespace drp {

struct OracleResult {
  double opt_value = 0.0;
  std::vector<std::uint8_t> opt_x;
  std::size_t feasible_count = 0;
};

// Upper record count for full enumeration.
inline constexpr std::size_t kMaxExhaustiveRecords = 25;

// Enumerates every assignment and returns the feasible maximizer; exact value
// ties break toward the lexicographically smallest assignment. Throws for
// instances beyond kMaxExhaustiveRecords or with no feasible assignment.
OracleResult exhaustive(const GeneralProblem& problem);

// algo_value / exhaustive optimum. Propagates oracle errors, including the
// size refusal.
double optimality_ratio(const GeneralProblem& problem, double algo_value);

// Exhaustive ratio when enumeration applies; otherwise algo_value divided by
// the dual value at the supplied multipliers, a conservative lower bound on
// the true ratio.
double optimality_ratio(const GeneralProblem& problem, double algo_value,
                        const DualState& duals);

}  // namespace drp
