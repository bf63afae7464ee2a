#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drp {

// Single-slot second-price auction from one advertiser's point of view.
struct AuctionScenario {
  double valuation = 0.0;       // true value per click
  double own_bid = 0.0;
  double competitor_top = 0.0;  // highest competing bid
  double reserve = 0.0;         // may be negative (always sell)
};

// Quasilinear utility: valuation minus the charge when the bid wins, zero
// when the traffic is lost or reserved. Ties lose.
double utility(const AuctionScenario& s);

struct Table1Case {
  std::string ordering;        // e.g. "bid>drp>v>ppc"
  int expected_deviation_sign; // -1, 0, +1
  int expected_truthful_sign;
  double deviation_utility = 0.0;
  double truthful_utility = 0.0;
  bool pass = false;
};

// Instantiates the twelve strict orderings of {bid, valuation, reserve,
// competitor top} with values spaced 0.5 apart and checks the utility sign
// under the deviating bid and under truthful bidding.
std::vector<Table1Case> verify_table1();

struct DominanceCounterexample {
  AuctionScenario truthful;
  AuctionScenario deviation;
  double truthful_utility = 0.0;
  double deviation_utility = 0.0;
};

struct DominanceResult {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<DominanceCounterexample> counterexample;
  bool pass = false;  // plain mode: no violations; negative control: some
};

// Samples random scenarios and checks that truthful bidding weakly dominates
// the sampled deviation. With negative_control the reserve is derived from
// the agent's own bid, which is expected to break dominance.
DominanceResult dominance_check(std::size_t trials, std::uint64_t seed,
                                bool negative_control = false);

}  // namespace drp
