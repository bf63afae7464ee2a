#pragma once

#include "drp/engine.hpp"
#include "drp/report.hpp"

namespace drp {

enum class CandidateMode { kExact, kSampled };

// Candidate multiplier values for one coordinate: the positive roots of each
// record's adjusted-cost function in that coordinate, with 0 prepended so the
// coordinate can relax back to inactive. Strictly ascending, deduplicated.
struct CandidateSet {
  std::size_t k = 0;
  std::vector<double> values;
};

struct Cd2rpConfig {
  std::size_t max_sweeps = 15;
  double tol = 1e-9;  // per-sweep max multiplier movement
  CandidateMode candidate_mode = CandidateMode::kExact;
  std::size_t sample_size = 4096;  // per shard, sampled mode
  bool stop_on_convergence = true;
};

// Roots are computed shard-locally, sorted per shard and merged in shard
// order. Sampled mode keeps sample_size evenly spaced values per shard.
CandidateSet candidates(const GeneralProblem& problem, const DualState& duals,
                        std::size_t k, const ShardPlan& plan, Executor& exec,
                        CandidateMode mode = CandidateMode::kExact,
                        std::size_t sample_size = 4096);

// Serial convenience overload.
CandidateSet candidates(const GeneralProblem& problem, const DualState& duals,
                        std::size_t k);

// Smallest candidate for coordinate k whose induced selection satisfies
// constraint k (other multipliers fixed), found by binary search; relies on
// the constraint total being nondecreasing in the coordinate. Throws when
// even the largest candidate cannot cover the bound.
struct CoordinateResult {
  double lambda = 0.0;
  Selection selection;  // evaluation at the returned multiplier
};
CoordinateResult dual_binary_search(const GeneralProblem& problem,
                                    const DualState& duals, std::size_t k,
                                    const CandidateSet& cands,
                                    const ShardPlan& plan, Executor& exec);

// Coordinate descent over the multipliers, each coordinate solved exactly by
// dual_binary_search. Starts from zero multipliers; sweeps in ascending
// coordinate order until no multiplier moves more than tol.
SolveResult solve_cd2rp(const GeneralProblem& problem, const Cd2rpConfig& cfg,
                        const ShardPlan& plan, Executor& exec);

}  // namespace drp
