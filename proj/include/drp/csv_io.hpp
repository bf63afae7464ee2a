#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "drp/lagrangian.hpp"
#include "drp/problem.hpp"

namespace drp {

// Parse or I/O failure with file and 1-based line context.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::filesystem::path& file, std::size_t line,
           const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Shortest round-trip representation (no rounding in files).
std::string format_double(double v);

// Header: id,bid,ctr,gpm
std::vector<DomainTrafficRecord> read_domain_csv(
    const std::filesystem::path& file);

// Header: id,c,b1,...,bL. Bounds travel via CLI/config, not the data file;
// an empty span selects all-zero bounds.
GeneralProblem read_general_csv(const std::filesystem::path& file,
                                std::span<const double> bounds = {});
void write_general_csv(const std::filesystem::path& file,
                       const GeneralProblem& problem);

// Header: id,selected
void write_selection_csv(const std::filesystem::path& file,
                         const GeneralProblem& problem, const Selection& sel);

// Header: id,r,x where x marks whether the record's own bid clears its quote.
// clamp_negative reports negative quotes as 0 (presentation only).
void write_reserve_csv(const std::filesystem::path& file,
                       const std::vector<DomainTrafficRecord>& records,
                       const PlatformConstraints& cons, const DualState& duals,
                       bool clamp_negative);

}  // namespace drp
