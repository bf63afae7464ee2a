#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "drp/lagrangian.hpp"
#include "drp/problem.hpp"

namespace drp {

struct ShardRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

// Contiguous balanced partition of [0, N). Shard sizes differ by at most one
// and the reduction order is the shard index, so results are reproducible for
// a fixed plan regardless of worker scheduling.
class ShardPlan {
 public:
  // Requested shard counts above n are clamped to n.
  static ShardPlan balanced(std::size_t n, std::size_t shards);

  std::span<const ShardRange> ranges() const { return ranges_; }
  std::size_t shard_count() const { return ranges_.size(); }
  std::size_t total() const { return total_; }

 private:
  std::vector<ShardRange> ranges_;
  std::size_t total_ = 0;
};

// Fixed-size worker pool. run() executes fn(0..count-1) across the pool and
// the calling thread and blocks until all tasks finish. With a single worker
// everything runs inline on the caller.
class Executor {
 public:
  explicit Executor(std::size_t workers = 0);  // 0 = detected core count
  ~Executor();
  Executor(const Executor&) = delete;
  Executor& operator=(const Executor&) = delete;

  std::size_t workers() const { return workers_; }
  void run(std::size_t count, const std::function<void(std::size_t)>& fn);

 private:
  struct Batch {
    const std::function<void(std::size_t)>* fn = nullptr;
    std::size_t count = 0;
    std::atomic<std::size_t> next{0};
    std::size_t remaining = 0;  // guarded by the pool mutex
  };

  void worker_loop();
  void drain(Batch& batch);

  std::size_t workers_;
  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  std::shared_ptr<Batch> batch_;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
  bool active_ = false;
  std::exception_ptr error_;
};

std::size_t detected_cores();

// Per-record map into a fixed-width tuple, pairwise-summed within each shard
// and reduced across shards in ascending shard order. MapFn must add record
// i's tuple into the accumulator passed to it.
using TupleMapFn = std::function<void(std::size_t, double*)>;
std::vector<double> map_sum(const ShardPlan& plan, Executor& exec,
                            std::size_t width, const TupleMapFn& fn);

// Sharded equivalent of lagrangian evaluate(); identical booleans for any
// plan, sums reproducible for a fixed plan.
Selection map_reduce(const GeneralProblem& problem, const DualState& duals,
                     const ShardPlan& plan, Executor& exec);

double dual_value(const GeneralProblem& problem, const DualState& duals,
                  const ShardPlan& plan, Executor& exec);

// Constraint-k total of the selection induced by the multipliers; the cheap
// per-probe reduction used by the dual binary search.
double constraint_total(const GeneralProblem& problem, const DualState& duals,
                        std::size_t k, const ShardPlan& plan, Executor& exec);

}  // namespace drp
