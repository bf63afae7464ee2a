#pragma once

#include "drp/lagrangian.hpp"
#include "drp/problem.hpp"

namespace drp {

struct ReservePriceQuote {
  std::string id;
  double price = 0.0;        // currency per click; negative means always sell
  DualState lambda_snapshot;
};

// Core pricing formula:
//   r = [l1*(tctr - ctr) + l2*(tgpm - gpm) + l3] / ctr
// nudged down by at most a couple of ulps so that a bid equal to the quote
// never sells under the decision rule. Requires exactly three multipliers.
double reserve_price_value(double ctr, double gpm,
                           const PlatformConstraints& cons,
                           std::span<const double> lambdas);

ReservePriceQuote reserve_price(const DomainTrafficRecord& rec,
                                const PlatformConstraints& cons,
                                const DualState& duals);

struct ClearingOutcome {
  bool sold = false;
  double ppc = 0.0;  // pay per click; meaningful only when sold
};

// Second-price rule with a reserve: sells iff the winning bid strictly
// exceeds the reserve, charging max(runner-up, reserve).
ClearingOutcome clearing_price(double winner_bid, double runner_up_bid,
                               double reserve);

}  // namespace drp
