#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "drp/report.hpp"

namespace drp::cli {

// Everything a solve run needs; embedded verbatim in the JSON report so a
// run can be reproduced from its own output.
struct RunConfig {
  std::filesystem::path input;
  std::string mode = "domain";  // domain | general
  std::optional<double> tctr;
  std::optional<double> tgpm;
  std::optional<double> tpv;
  std::vector<double> bounds;   // general mode; empty = all zero
  std::string algo = "cd2rp";   // cd2rp | d3rp
  std::optional<double> alpha;  // d3rp; defaulted heuristically in domain mode
  std::size_t max_iters = 100;
  std::size_t max_sweeps = 15;
  double tol = -1.0;            // <= 0: per-algorithm default
  std::string candidate_mode = "exact";  // exact | sampled
  std::size_t sample_size = 4096;
  std::size_t shards = 0;       // 0: detected core count
  std::uint64_t seed = 42;
  std::filesystem::path out_dir = ".";
  bool clamp_reserve = false;
};

struct GenConfig {
  std::size_t n = 0;
  std::size_t l = 3;
  std::uint64_t seed = 42;
  std::vector<double> fractions;  // empty = 0.1 per constraint
  std::filesystem::path output;
};

struct OracleConfig {
  std::filesystem::path input;
  std::string mode = "general";
  std::optional<double> tctr;
  std::optional<double> tgpm;
  std::optional<double> tpv;
  std::vector<double> bounds;
};

struct IcCheckConfig {
  std::size_t trials = 100000;
  std::uint64_t seed = 42;
  bool negative_control = false;
};

struct BenchConfig {
  std::vector<std::size_t> scales;
  std::size_t l = 3;
  std::vector<std::size_t> shards_list = {1};
  std::string algo = "cd2rp";
  std::optional<double> alpha;
  std::size_t max_iters = 100;
  std::size_t max_sweeps = 15;
  std::uint64_t seed = 42;
  std::vector<double> fractions;
  std::filesystem::path output;  // empty = stdout
};

struct GapCurveConfig {
  RunConfig run;                 // input/mode/bounds/shards/seed reused
  std::size_t iterations = 15;
  std::vector<double> alpha_grid;  // empty = {0.5, 1, 2} x heuristic
  std::filesystem::path output;    // empty = stdout
};

int cmd_solve(const RunConfig& cfg);
int cmd_gen(const GenConfig& cfg);
int cmd_oracle(const OracleConfig& cfg);
int cmd_ic_check(const IcCheckConfig& cfg);
int cmd_bench(const BenchConfig& cfg);
int cmd_gap_curve(const GapCurveConfig& cfg);

// Full argv-style entry point (excluding the program name).
int run_cli(const std::vector<std::string>& args);

// Relative gap of the last feasible iterate, falling back to the best
// feasible primal against the best dual bound.
std::optional<double> final_relative_gap(const SolveReport& report);

}  // namespace drp::cli
