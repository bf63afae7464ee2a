#include "drp/reserve_price.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace drp {

double reserve_price_value(double ctr, double gpm,
                           const PlatformConstraints& cons,
                           std::span<const double> lambdas) {
  if (lambdas.size() != 3) {
    throw std::invalid_argument("reserve pricing needs exactly 3 multipliers");
  }
  if (!(ctr > 0.0)) {
    throw std::invalid_argument("reserve price undefined for ctr <= 0");
  }
  // Accumulated in the same order as the adjusted-cost dot product (whose
  // compiled coefficients are the exact negations of these terms), so the
  // comparison bid > r agrees with the decision rule.
  double numer = 0.0;
  numer += lambdas[0] * (cons.tctr - ctr);
  numer += lambdas[1] * (cons.tgpm - gpm);
  numer += lambdas[2] * 1.0;

  double r = numer / ctr;
  // Division can land one ulp above the sell boundary; step down until a bid
  // of exactly r maps to adjusted cost <= 0.
  while (r * ctr > numer) {
    r = std::nextafter(r, -std::numeric_limits<double>::infinity());
  }
  return r;
}

ReservePriceQuote reserve_price(const DomainTrafficRecord& rec,
                                const PlatformConstraints& cons,
                                const DualState& duals) {
  ReservePriceQuote quote;
  quote.id = rec.id;
  quote.price = reserve_price_value(rec.ctr, rec.gpm, cons, duals.lambdas);
  quote.lambda_snapshot = duals;
  return quote;
}

ClearingOutcome clearing_price(double winner_bid, double runner_up_bid,
                               double reserve) {
  ClearingOutcome out;
  out.sold = winner_bid > reserve;
  if (out.sold) out.ppc = std::max(runner_up_bid, reserve);
  return out;
}

}  // namespace drp
