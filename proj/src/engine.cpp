#include "drp/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drp {

namespace {

// Below this many records the per-call pool handoff costs more than the work.
constexpr std::size_t kParallelCutoff = 8192;

void check_plan(const GeneralProblem& problem, const ShardPlan& plan) {
  if (plan.total() != problem.num_records()) {
    throw std::invalid_argument("shard plan covers " +
                                std::to_string(plan.total()) +
                                " records, problem has " +
                                std::to_string(problem.num_records()));
  }
}

bool run_parallel(const ShardPlan& plan, Executor& exec) {
  return exec.workers() > 1 && plan.shard_count() > 1 &&
         plan.total() >= kParallelCutoff;
}

template <typename ShardFn>
void for_each_shard(const ShardPlan& plan, Executor& exec, const ShardFn& fn) {
  if (run_parallel(plan, exec)) {
    exec.run(plan.shard_count(), fn);
  } else {
    for (std::size_t s = 0; s < plan.shard_count(); ++s) fn(s);
  }
}

}  // namespace

ShardPlan ShardPlan::balanced(std::size_t n, std::size_t shards) {
  if (n == 0) throw std::invalid_argument("cannot shard an empty range");
  if (shards == 0) throw std::invalid_argument("need at least one shard");
  ShardPlan plan;
  const std::size_t s = std::min(shards, n);
  const std::size_t base = n / s;
  const std::size_t extra = n % s;
  plan.ranges_.reserve(s);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    plan.ranges_.push_back({begin, begin + size});
    begin += size;
  }
  plan.total_ = n;
  return plan;
}

std::size_t detected_cores() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

Executor::Executor(std::size_t workers)
    : workers_(workers == 0 ? detected_cores() : workers) {
  threads_.reserve(workers_ > 0 ? workers_ - 1 : 0);
  for (std::size_t i = 1; i < workers_; ++i) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

Executor::~Executor() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

void Executor::drain(Batch& batch) {
  while (true) {
    const std::size_t i = batch.next.fetch_add(1, std::memory_order_relaxed);
    if (i >= batch.count) break;
    try {
      (*batch.fn)(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
    std::lock_guard<std::mutex> lock(mutex_);
    if (--batch.remaining == 0) done_.notify_all();
  }
}

void Executor::worker_loop() {
  std::uint64_t seen = 0;
  while (true) {
    std::shared_ptr<Batch> batch;
    {
      std::unique_lock<std::mutex> lock(mutex_);
      wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      batch = batch_;
    }
    if (batch) drain(*batch);
  }
}

void Executor::run(std::size_t count,
                   const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  if (workers_ <= 1 || count == 1 || threads_.empty()) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  auto batch = std::make_shared<Batch>();
  batch->fn = &fn;
  batch->count = count;
  batch->remaining = count;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (active_) {
      throw std::logic_error("Executor::run is not reentrant");
    }
    active_ = true;
    batch_ = batch;
    ++generation_;
  }
  wake_.notify_all();
  drain(*batch);
  std::unique_lock<std::mutex> lock(mutex_);
  done_.wait(lock, [&] { return batch->remaining == 0; });
  batch_.reset();
  active_ = false;
  if (error_) {
    auto err = error_;
    error_ = nullptr;
    lock.unlock();
    std::rethrow_exception(err);
  }
}

std::vector<double> map_sum(const ShardPlan& plan, Executor& exec,
                            std::size_t width, const TupleMapFn& fn) {
  if (width == 0 || width > detail::kMaxTupleWidth) {
    throw std::invalid_argument("unsupported tuple width");
  }
  const std::size_t shards = plan.shard_count();
  std::vector<double> partials(shards * width, 0.0);

  // Pairwise tree over each shard, leaf blocks summed linearly.
  struct Tree {
    static void sum(const TupleMapFn& f, std::size_t b, std::size_t e,
                    std::size_t w, double* out) {
      if (e - b <= detail::kSumLeafSize) {
        std::fill(out, out + w, 0.0);
        for (std::size_t i = b; i < e; ++i) f(i, out);
        return;
      }
      const std::size_t mid = b + (e - b) / 2;
      sum(f, b, mid, w, out);
      double rhs[detail::kMaxTupleWidth];
      sum(f, mid, e, w, rhs);
      for (std::size_t j = 0; j < w; ++j) out[j] += rhs[j];
    }
  };
  for_each_shard(plan, exec, [&](std::size_t s) {
    const auto range = plan.ranges()[s];
    Tree::sum(fn, range.begin, range.end, width, partials.data() + s * width);
  });

  std::vector<double> total(width, 0.0);
  for (std::size_t s = 0; s < shards; ++s) {
    for (std::size_t w = 0; w < width; ++w) total[w] += partials[s * width + w];
  }
  return total;
}

Selection map_reduce(const GeneralProblem& problem, const DualState& duals,
                     const ShardPlan& plan, Executor& exec) {
  detail::check_dims(problem, duals);
  check_plan(problem, plan);
  const std::size_t l = problem.num_constraints();
  const std::size_t width = l + 2;
  const std::size_t shards = plan.shard_count();

  Selection sel;
  sel.selected.resize(problem.num_records());
  std::vector<double> partials(shards * width, 0.0);

  for_each_shard(plan, exec, [&](std::size_t s) {
    const auto range = plan.ranges()[s];
    detail::evaluate_range(problem, duals.lambdas, range.begin, range.end,
                           sel.selected.data(), partials.data() + s * width);
  });

  double total[detail::kMaxTupleWidth] = {0.0};
  for (std::size_t s = 0; s < shards; ++s) {
    for (std::size_t w = 0; w < width; ++w) total[w] += partials[s * width + w];
  }
  sel.primal_value = total[0];
  sel.selected_count = static_cast<std::size_t>(total[1]);
  sel.constraint_totals.assign(total + 2, total + 2 + l);
  sel.feasible = true;
  for (std::size_t k = 0; k < l; ++k) {
    if (sel.constraint_totals[k] < problem.bounds()[k]) {
      sel.feasible = false;
      break;
    }
  }
  return sel;
}

double dual_value(const GeneralProblem& problem, const DualState& duals,
                  const ShardPlan& plan, Executor& exec) {
  detail::check_dims(problem, duals);
  check_plan(problem, plan);
  const std::size_t shards = plan.shard_count();
  std::vector<double> partials(shards, 0.0);
  for_each_shard(plan, exec, [&](std::size_t s) {
    const auto range = plan.ranges()[s];
    partials[s] = detail::positive_part_range(problem, duals.lambdas,
                                              range.begin, range.end);
  });
  double relaxed = 0.0;
  for (double p : partials) relaxed += p;
  double penalty = 0.0;
  for (std::size_t k = 0; k < problem.num_constraints(); ++k) {
    penalty += duals.lambdas[k] * problem.bounds()[k];
  }
  return relaxed - penalty;
}

double constraint_total(const GeneralProblem& problem, const DualState& duals,
                        std::size_t k, const ShardPlan& plan, Executor& exec) {
  detail::check_dims(problem, duals);
  check_plan(problem, plan);
  if (k >= problem.num_constraints()) {
    throw std::invalid_argument("constraint index out of range");
  }
  const std::size_t shards = plan.shard_count();
  std::vector<double> partials(shards, 0.0);
  for_each_shard(plan, exec, [&](std::size_t s) {
    const auto range = plan.ranges()[s];
    partials[s] = detail::constraint_total_range(problem, duals.lambdas, k,
                                                 range.begin, range.end);
  });
  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

}  // namespace drp
