#include "drp/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "drp/rng.hpp"

namespace drp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

GeneralProblem::GeneralProblem(std::vector<double> values,
                               std::vector<double> coefs,
                               std::vector<double> bounds, ProblemMode mode,
                               std::vector<std::string> ids)
    : values_(std::move(values)),
      coefs_(std::move(coefs)),
      bounds_(std::move(bounds)),
      ids_(std::move(ids)),
      mode_(mode) {
  const std::size_t n = values_.size();
  const std::size_t l = bounds_.size();
  require(n >= 1, "empty problem");
  require(l >= 1, "problem needs at least one constraint");
  require(l <= kMaxConstraints,
          "constraint count " + std::to_string(l) + " exceeds cap of " +
              std::to_string(kMaxConstraints));
  require(coefs_.size() == n * l, "coefficient matrix has wrong shape");
  require(ids_.empty() || ids_.size() == n, "id column has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw std::invalid_argument("record " + id(i) +
                                  ": value coefficient must be finite and >= 0");
    }
  }
  for (std::size_t j = 0; j < coefs_.size(); ++j) {
    if (!std::isfinite(coefs_[j])) {
      throw std::invalid_argument("record " + id(j / l) +
                                  ": constraint coefficient must be finite");
    }
  }
  for (double b : bounds_) {
    require(std::isfinite(b), "constraint bound must be finite");
  }
}

std::string GeneralProblem::id(std::size_t i) const {
  return ids_.empty() ? std::to_string(i) : ids_[i];
}

TrafficRecord GeneralProblem::record(std::size_t i) const {
  auto row = coefs(i);
  return TrafficRecord{id(i), values_[i], {row.begin(), row.end()}};
}

double GeneralProblem::mean_abs_coef() const {
  double sum = 0.0;
  for (double c : coefs_) sum += std::fabs(c);
  return sum / static_cast<double>(coefs_.size());
}

double GeneralProblem::mean_abs_value() const {
  double sum = 0.0;
  for (double v : values_) sum += std::fabs(v);
  return sum / static_cast<double>(values_.size());
}

GeneralProblem compile_domain(const std::vector<DomainTrafficRecord>& records,
                              const PlatformConstraints& cons) {
  require(!records.empty(), "empty problem");
  require(std::isfinite(cons.tctr) && cons.tctr >= 0.0, "tctr must be finite and >= 0");
  require(std::isfinite(cons.tgpm) && cons.tgpm >= 0.0, "tgpm must be finite and >= 0");
  require(std::isfinite(cons.tpv) && cons.tpv > 0.0, "tpv must be finite and > 0");

  const std::size_t n = records.size();
  std::vector<double> values(n);
  std::vector<double> coefs(n * 3);
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = records[i];
    if (!(std::isfinite(r.ctr) && r.ctr > 0.0 && r.ctr <= 1.0)) {
      throw std::invalid_argument("record " + r.id + ": ctr must be in (0, 1]");
    }
    if (!std::isfinite(r.bid) || r.bid < 0.0) {
      throw std::invalid_argument("record " + r.id + ": bid must be finite and >= 0");
    }
    if (!std::isfinite(r.gpm) || r.gpm < 0.0) {
      throw std::invalid_argument("record " + r.id + ": gpm must be finite and >= 0");
    }
    values[i] = r.bid * r.ctr;
    coefs[i * 3 + 0] = r.ctr - cons.tctr;
    coefs[i * 3 + 1] = r.gpm - cons.tgpm;
    coefs[i * 3 + 2] = -1.0;
    ids[i] = r.id;
  }
  return GeneralProblem(std::move(values), std::move(coefs),
                        {0.0, 0.0, -cons.tpv}, ProblemMode::kDomainCompiled,
                        std::move(ids));
}

GeneralProblem generate_synthetic(std::size_t n, std::size_t l,
                                  std::uint64_t seed,
                                  std::span<const double> bound_fractions) {
  require(n >= 1, "empty problem");
  require(l >= 1, "problem needs at least one constraint");
  require(bound_fractions.size() == l, "need one bound fraction per constraint");
  for (double f : bound_fractions) {
    require(std::isfinite(f) && f > 0.0 && f < 1.0,
            "bound fractions must lie in (0, 1)");
  }

  std::mt19937_64 gen(derive_seed(seed, "synthetic-instance"));
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = canonical_unit(gen);
  std::vector<double> coefs(n * l);
  for (std::size_t j = 0; j < coefs.size(); ++j) coefs[j] = canonical_unit(gen);

  std::vector<double> bounds(l);
  for (std::size_t k = 0; k < l; ++k) {
    bounds[k] = bound_fractions[k] * static_cast<double>(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += coefs[i * l + k];
    if (total < bounds[k]) {
      throw std::runtime_error("infeasible synthetic instance: constraint " +
                               std::to_string(k) + " can reach at most " +
                               std::to_string(total));
    }
  }
  return GeneralProblem(std::move(values), std::move(coefs), std::move(bounds),
                        ProblemMode::kRawGeneral);
}

}  // namespace drp
