#include "drp/report.hpp"

namespace drp {

std::optional<double> best_dual_bound(const SolveReport& report) {
  std::optional<double> best;
  for (const auto& entry : report.trace) {
    if (!best || entry.dual_value < *best) best = entry.dual_value;
  }
  return best;
}

}  // namespace drp
