#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace drp {

// One traffic unit in the general form: a value coefficient and one
// constraint coefficient per global constraint.
struct TrafficRecord {
  std::string id;
  double value = 0.0;         // expected revenue if the unit is sold
  std::vector<double> coef;   // constraint coefficients, one per constraint
};

// Raw auction-side view of a traffic unit before compilation.
struct DomainTrafficRecord {
  std::string id;
  double bid = 0.0;   // winner's bid, currency per click
  double ctr = 0.0;   // predicted click-through rate, in (0, 1]
  double gpm = 0.0;   // predicted GMV per mille
};

// Platform-level thresholds: CTR and GPM floors plus an impression cap.
struct PlatformConstraints {
  double tctr = 0.0;
  double tgpm = 0.0;
  double tpv = 0.0;
};

enum class ProblemMode { kDomainCompiled, kRawGeneral };

// Maximize sum(value_i * x_i) subject to sum(coef_ik * x_i) >= bound_k for
// every constraint k, x_i binary. Coefficients are stored row-major so a
// record's row is contiguous.
class GeneralProblem {
 public:
  GeneralProblem(std::vector<double> values, std::vector<double> coefs,
                 std::vector<double> bounds, ProblemMode mode,
                 std::vector<std::string> ids = {});

  std::size_t num_records() const { return values_.size(); }
  std::size_t num_constraints() const { return bounds_.size(); }

  double value(std::size_t i) const { return values_[i]; }
  std::span<const double> coefs(std::size_t i) const {
    return {coefs_.data() + i * bounds_.size(), bounds_.size()};
  }
  const double* coef_data() const { return coefs_.data(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& bounds() const { return bounds_; }
  ProblemMode mode() const { return mode_; }

  bool has_ids() const { return !ids_.empty(); }
  // Stored id, or the record index when the instance carries no ids.
  std::string id(std::size_t i) const;

  // Materializes one record; meant for record-level APIs and tests, not for
  // per-record hot loops.
  TrafficRecord record(std::size_t i) const;

  // Mean absolute constraint coefficient over all records and constraints.
  double mean_abs_coef() const;
  double mean_abs_value() const;

 private:
  std::vector<double> values_;   // length N
  std::vector<double> coefs_;    // length N * L, row-major
  std::vector<double> bounds_;   // length L
  std::vector<std::string> ids_; // empty, or length N
  ProblemMode mode_;
};

// Hard cap on the constraint count; candidate-set construction is quadratic
// in L so unbounded L is rejected up front.
inline constexpr std::size_t kMaxConstraints = 20;

// Compiles the domain formulation into the general form:
//   value = bid * ctr
//   coef  = (ctr - tctr, gpm - tgpm, -1)
//   bound = (0, 0, -tpv)
GeneralProblem compile_domain(const std::vector<DomainTrafficRecord>& records,
                              const PlatformConstraints& cons);

// Synthetic instance with value and coefficients drawn uniformly from [0, 1]
// and bound_k = bound_fractions[k] * n. Deterministic for a fixed seed.
// Throws if the generated coefficients cannot cover a bound.
GeneralProblem generate_synthetic(std::size_t n, std::size_t l,
                                  std::uint64_t seed,
                                  std::span<const double> bound_fractions);

}  // namespace drp
