#include "drp/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "drp/cd2rp.hpp"
#include "drp/csv_io.hpp"
#include "drp/d3rp.hpp"
#include "drp/engine.hpp"
#include "drp/oracle.hpp"
#include "drp/auction_sim.hpp"
#include "drp/rng.hpp"

namespace drp::cli {

namespace {

using nlohmann::json;

struct LoadedProblem {
  GeneralProblem problem;
  std::vector<DomainTrafficRecord> domain_records;
  PlatformConstraints cons;
  bool is_domain = false;
};

void validate_mode_flags(const std::string& mode,
                         const std::optional<double>& tctr,
                         const std::optional<double>& tgpm,
                         const std::optional<double>& tpv,
                         const std::vector<double>& bounds) {
  if (mode != "domain" && mode != "general") {
    throw std::invalid_argument("mode must be 'domain' or 'general'");
  }
  if (mode == "domain") {
    if (!tctr || !tgpm || !tpv) {
      throw std::invalid_argument(
          "domain mode requires --tctr, --tgpm and --tpv");
    }
    if (!bounds.empty()) {
      throw std::invalid_argument("--bounds applies to general mode only");
    }
  } else {
    if (tctr || tgpm || tpv) {
      throw std::invalid_argument(
          "--tctr/--tgpm/--tpv apply to domain mode only");
    }
  }
}

LoadedProblem load_problem(const std::filesystem::path& input,
                           const std::string& mode,
                           const std::optional<double>& tctr,
                           const std::optional<double>& tgpm,
                           const std::optional<double>& tpv,
                           const std::vector<double>& bounds) {
  validate_mode_flags(mode, tctr, tgpm, tpv, bounds);
  if (mode == "domain") {
    auto records = read_domain_csv(input);
    PlatformConstraints cons{*tctr, *tgpm, *tpv};
    if (cons.tpv > static_cast<double>(records.size())) {
      std::cerr << "warning: tpv " << format_double(cons.tpv) << " exceeds N "
                << records.size() << "; the impression cap is vacuous\n";
    }
    auto problem = compile_domain(records, cons);
    return LoadedProblem{std::move(problem), std::move(records), cons, true};
  }
  auto problem = read_general_csv(input, bounds);
  return LoadedProblem{std::move(problem), {}, {}, false};
}

std::size_t resolve_shards(std::size_t shards) {
  return shards == 0 ? detected_cores() : shards;
}

struct ResolvedSolver {
  std::string algo;
  double alpha = 0.0;  // d3rp only
  double tol = 0.0;
  std::size_t max_iters = 0;
  std::size_t max_sweeps = 0;
  CandidateMode candidate_mode = CandidateMode::kExact;
  std::size_t sample_size = 0;
};

ResolvedSolver resolve_solver(const RunConfig& cfg,
                              const GeneralProblem& problem) {
  ResolvedSolver r;
  r.algo = cfg.algo;
  r.max_iters = cfg.max_iters;
  r.max_sweeps = cfg.max_sweeps;
  r.sample_size = cfg.sample_size;
  if (cfg.algo == "d3rp") {
    if (cfg.alpha) {
      r.alpha = *cfg.alpha;
    } else if (cfg.mode == "domain") {
      r.alpha = heuristic_alpha(problem);
    } else {
      throw std::invalid_argument(
          "--alpha is required for d3rp on general-form problems");
    }
    r.tol = cfg.tol > 0.0 ? cfg.tol : default_d3rp_tol(problem);
  } else if (cfg.algo == "cd2rp") {
    r.tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;
    if (cfg.candidate_mode == "exact") {
      r.candidate_mode = CandidateMode::kExact;
    } else if (cfg.candidate_mode == "sampled") {
      r.candidate_mode = CandidateMode::kSampled;
    } else {
      throw std::invalid_argument("candidate mode must be exact or sampled");
    }
  } else {
    throw std::invalid_argument("algo must be 'd3rp' or 'cd2rp'");
  }
  return r;
}

SolveResult run_solver(const GeneralProblem& problem, const ResolvedSolver& rs,
                       const ShardPlan& plan, Executor& exec,
                       bool stop_on_convergence = true,
                       std::size_t forced_iterations = 0) {
  if (rs.algo == "d3rp") {
    D3rpConfig cfg;
    cfg.alpha = rs.alpha;
    cfg.max_iters = forced_iterations ? forced_iterations : rs.max_iters;
    cfg.tol = rs.tol;
    cfg.stop_on_convergence = stop_on_convergence;
    return solve_d3rp(problem, cfg, plan, exec);
  }
  Cd2rpConfig cfg;
  cfg.max_sweeps = forced_iterations ? forced_iterations : rs.max_sweeps;
  cfg.tol = rs.tol;
  cfg.candidate_mode = rs.candidate_mode;
  cfg.sample_size = rs.sample_size;
  cfg.stop_on_convergence = stop_on_convergence;
  return solve_cd2rp(problem, cfg, plan, exec);
}

json config_json(const RunConfig& cfg, const ResolvedSolver& rs,
                 std::size_t shards) {
  json j;
  j["command"] = "solve";
  j["input"] = cfg.input.string();
  j["mode"] = cfg.mode;
  if (cfg.tctr) j["tctr"] = *cfg.tctr;
  if (cfg.tgpm) j["tgpm"] = *cfg.tgpm;
  if (cfg.tpv) j["tpv"] = *cfg.tpv;
  if (!cfg.bounds.empty()) j["bounds"] = cfg.bounds;
  j["algo"] = rs.algo;
  if (rs.algo == "d3rp") {
    j["alpha"] = rs.alpha;
    j["max_iters"] = rs.max_iters;
  } else {
    j["max_sweeps"] = rs.max_sweeps;
    j["candidate_mode"] =
        rs.candidate_mode == CandidateMode::kExact ? "exact" : "sampled";
    j["sample_size"] = rs.sample_size;
  }
  j["tol"] = rs.tol;
  j["shards"] = shards;
  j["seed"] = cfg.seed;
  j["out_dir"] = cfg.out_dir.string();
  j["clamp_reserve"] = cfg.clamp_reserve;
  return j;
}

json trace_json(const SolveReport& report) {
  json rows = json::array();
  for (const auto& e : report.trace) {
    json row;
    row["iteration"] = e.iteration;
    row["dual_value"] = e.dual_value;
    row["primal_value"] = e.primal_value;
    row["feasible"] = e.feasible;
    if (e.relative_gap) {
      row["relative_gap"] = *e.relative_gap;
    } else {
      row["relative_gap"] = nullptr;
    }
    row["slack"] = e.slack;
    row["lambdas"] = e.lambdas;
    rows.push_back(std::move(row));
  }
  return rows;
}

json result_json(const GeneralProblem& problem, const SolveResult& result,
                 double final_dual) {
  const auto& report = result.report;
  json j;
  j["algo"] = report.algo;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["final_feasible"] = report.final_feasible;
  j["shards"] = report.shard_count;
  j["n"] = problem.num_records();
  j["l"] = problem.num_constraints();

  json final;
  final["lambdas"] = result.duals.lambdas;
  final["primal_value"] = result.selection.primal_value;
  final["dual_value"] = final_dual;
  final["selected_count"] = result.selection.selected_count;
  json slack = json::array();
  for (std::size_t k = 0; k < problem.num_constraints(); ++k) {
    slack.push_back(result.selection.constraint_totals[k] -
                    problem.bounds()[k]);
  }
  final["slack"] = std::move(slack);
  j["final"] = std::move(final);

  json best;
  best["found"] = report.best_feasible_found;
  best["repaired"] = report.repaired;
  if (report.best_feasible_found) {
    best["primal_value"] = report.best_feasible_primal;
    best["selected_count"] = result.best_feasible->selected_count;
  }
  j["best_feasible"] = std::move(best);

  if (auto bound = best_dual_bound(report)) j["best_dual_bound"] = *bound;
  if (auto gap = final_relative_gap(report)) j["relative_gap"] = *gap;
  j["trace"] = trace_json(report);
  return j;
}

json timing_json(const PhaseTimings& t) {
  json j;
  j["map"] = t.map_ms;
  j["candidates"] = t.candidates_ms;
  j["search"] = t.search_ms;
  j["update"] = t.update_ms;
  j["total"] = t.total_ms;
  return j;
}

std::ostream& open_or_stdout(std::ofstream& file,
                             const std::filesystem::path& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return file;
}

}  // namespace

std::optional<double> final_relative_gap(const SolveReport& report) {
  for (auto it = report.trace.rbegin(); it != report.trace.rend(); ++it) {
    if (it->feasible) return it->relative_gap;
  }
  if (report.best_feasible_found && report.best_feasible_primal > 0.0) {
    if (auto bound = best_dual_bound(report)) {
      return (*bound - report.best_feasible_primal) /
             report.best_feasible_primal;
    }
  }
  return std::nullopt;
}

int cmd_solve(const RunConfig& cfg) {
  auto loaded = load_problem(cfg.input, cfg.mode, cfg.tctr, cfg.tgpm, cfg.tpv,
                             cfg.bounds);
  const auto& problem = loaded.problem;
  const auto rs = resolve_solver(cfg, problem);
  const std::size_t shards = resolve_shards(cfg.shards);
  Executor exec(shards);
  const auto plan = ShardPlan::balanced(problem.num_records(), shards);

  SolveResult result = run_solver(problem, rs, plan, exec);
  const double final_dual = dual_value(problem, result.duals, plan, exec);

  std::filesystem::create_directories(cfg.out_dir);
  const auto selection_path = cfg.out_dir / "selection.csv";
  const auto report_path = cfg.out_dir / "report.json";
  // The deployable selection: best feasible iterate when one exists.
  const Selection& chosen =
      result.best_feasible ? *result.best_feasible : result.selection;
  write_selection_csv(selection_path, problem, chosen);

  std::filesystem::path reserve_path;
  if (loaded.is_domain) {
    reserve_path = cfg.out_dir / "reserve_prices.csv";
    write_reserve_csv(reserve_path, loaded.domain_records, loaded.cons,
                      result.duals, cfg.clamp_reserve);
  }

  json report;
  report["config"] = config_json(cfg, rs, shards);
  report["result"] = result_json(problem, result, final_dual);
  report["timing_ms"] = timing_json(result.report.timings);
  {
    std::ofstream out(report_path);
    if (!out) {
      throw std::runtime_error("cannot open " + report_path.string() +
                               " for writing");
    }
    out << report.dump(2) << "\n";
  }

  const bool feasible = result.best_feasible.has_value();
  std::cout << "algo: " << rs.algo << "  shards: " << shards
            << "  iterations: " << result.report.iterations
            << (result.report.converged ? " (converged)" : "") << "\n";
  std::cout << "final primal: " << format_double(result.selection.primal_value)
            << "  dual: " << format_double(final_dual)
            << "  feasible: " << (result.report.final_feasible ? "yes" : "no")
            << "\n";
  if (result.best_feasible) {
    std::cout << "best feasible primal: "
              << format_double(result.best_feasible->primal_value) << " ("
              << result.best_feasible->selected_count << " of "
              << problem.num_records() << " selected"
              << (result.report.repaired ? ", repaired" : "") << ")\n";
  } else {
    for (std::size_t k = 0; k < problem.num_constraints(); ++k) {
      const double total = result.selection.constraint_totals[k];
      if (total < problem.bounds()[k]) {
        std::cout << "no feasible selection: constraint " << k << " total "
                  << format_double(total) << " < bound "
                  << format_double(problem.bounds()[k]) << "\n";
        break;
      }
    }
  }
  std::cout << "wrote " << selection_path.string();
  if (!reserve_path.empty()) std::cout << " " << reserve_path.string();
  std::cout << " " << report_path.string() << "\n";
  return feasible ? 0 : 1;
}

int cmd_gen(const GenConfig& cfg) {
  std::vector<double> fractions = cfg.fractions;
  if (fractions.empty()) fractions.assign(cfg.l, 0.1);
  auto problem = generate_synthetic(cfg.n, cfg.l, cfg.seed, fractions);
  write_general_csv(cfg.output, problem);
  std::cout << "wrote " << cfg.output.string() << " (n=" << cfg.n
            << ", l=" << cfg.l << ")\n";
  std::cout << "bounds: ";
  for (std::size_t k = 0; k < problem.bounds().size(); ++k) {
    std::cout << (k ? "," : "") << format_double(problem.bounds()[k]);
  }
  std::cout << "\n";
  return 0;
}

int cmd_oracle(const OracleConfig& cfg) {
  auto loaded = load_problem(cfg.input, cfg.mode, cfg.tctr, cfg.tgpm, cfg.tpv,
                             cfg.bounds);
  const auto result = exhaustive(loaded.problem);
  json j;
  j["opt_value"] = result.opt_value;
  std::string bits(result.opt_x.size(), '0');
  for (std::size_t i = 0; i < result.opt_x.size(); ++i) {
    if (result.opt_x[i]) bits[i] = '1';
  }
  j["opt_x"] = bits;
  j["feasible_count"] = result.feasible_count;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_ic_check(const IcCheckConfig& cfg) {
  const auto rows = verify_table1();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    std::cout << "table1 row " << (i + 1) << (row.pass ? " PASS  " : " FAIL  ")
              << row.ordering << "  deviation utility "
              << format_double(row.deviation_utility) << ", truthful "
              << format_double(row.truthful_utility) << "\n";
    if (row.pass) ++matched;
  }
  std::cout << "table1: " << matched << "/" << rows.size() << " rows match\n";

  const auto dom = dominance_check(cfg.trials, cfg.seed, cfg.negative_control);
  std::cout << "dominance" << (cfg.negative_control ? " (negative control)" : "")
            << ": " << dom.trials << " trials, " << dom.violations
            << " violations\n";
  if (dom.counterexample) {
    const auto& c = *dom.counterexample;
    std::cout << "counterexample: v=" << format_double(c.truthful.valuation)
              << " top=" << format_double(c.truthful.competitor_top)
              << " deviation bid=" << format_double(c.deviation.own_bid)
              << " truthful utility=" << format_double(c.truthful_utility)
              << " deviation utility=" << format_double(c.deviation_utility)
              << "\n";
  }
  const bool ok = matched == rows.size() && dom.pass;
  return ok ? 0 : 1;
}

int cmd_bench(const BenchConfig& cfg) {
  if (cfg.scales.empty()) {
    throw std::invalid_argument("bench needs at least one scale");
  }
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, cfg.output);
  out << "n,l,shards,sweeps,wall_ms,relative_gap\n";

  for (std::size_t scale : cfg.scales) {
    std::vector<double> fractions = cfg.fractions;
    if (fractions.empty()) fractions.assign(cfg.l, 0.1);
    auto problem = generate_synthetic(
        scale, cfg.l, derive_seed(cfg.seed, "bench-" + std::to_string(scale)),
        fractions);

    RunConfig run;
    run.mode = "general";
    run.algo = cfg.algo;
    run.alpha = cfg.alpha;
    run.max_iters = cfg.max_iters;
    run.max_sweeps = cfg.max_sweeps;
    ResolvedSolver rs;
    if (cfg.algo == "d3rp" && !cfg.alpha) {
      run.alpha = heuristic_alpha(problem);  // bench default
    }
    rs = resolve_solver(run, problem);

    for (std::size_t shards : cfg.shards_list) {
      Executor exec(shards);
      const auto plan = ShardPlan::balanced(problem.num_records(), shards);
      const auto result = run_solver(problem, rs, plan, exec);
      out << scale << ',' << cfg.l << ',' << shards << ','
          << result.report.iterations << ','
          << format_double(result.report.timings.total_ms) << ',';
      if (auto gap = final_relative_gap(result.report)) {
        out << format_double(*gap);
      }
      out << "\n";
    }
  }
  if (!out) throw std::runtime_error("bench output write failed");
  return 0;
}

int cmd_gap_curve(const GapCurveConfig& cfg) {
  auto loaded = load_problem(cfg.run.input, cfg.run.mode, cfg.run.tctr,
                             cfg.run.tgpm, cfg.run.tpv, cfg.run.bounds);
  const auto& problem = loaded.problem;
  const std::size_t shards = resolve_shards(cfg.run.shards);
  Executor exec(shards);
  const auto plan = ShardPlan::balanced(problem.num_records(), shards);

  std::vector<double> grid = cfg.alpha_grid;
  if (grid.empty()) {
    const double h = heuristic_alpha(problem);
    grid = {0.5 * h, h, 2.0 * h};
  }

  std::ofstream file;
  std::ostream& out = open_or_stdout(file, cfg.output);
  out << "iteration,cd2rp";
  for (double a : grid) out << ",d3rp_alpha_" << format_double(a);
  out << "\n";
  if (cfg.iterations == 0) return 0;

  Cd2rpConfig cd;
  cd.max_sweeps = cfg.iterations;
  cd.stop_on_convergence = false;
  const auto cd_result = solve_cd2rp(problem, cd, plan, exec);

  std::vector<SolveResult> dd_results;
  dd_results.reserve(grid.size());
  for (double a : grid) {
    D3rpConfig dd;
    dd.alpha = a;
    dd.max_iters = cfg.iterations;
    dd.stop_on_convergence = false;
    dd_results.push_back(solve_d3rp(problem, dd, plan, exec));
  }

  auto cell = [&](const SolveReport& report, std::size_t t) -> std::string {
    if (t < report.trace.size() && report.trace[t].relative_gap) {
      return format_double(*report.trace[t].relative_gap);
    }
    return "";
  };
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    out << (t + 1) << ',' << cell(cd_result.report, t);
    for (const auto& dd : dd_results) out << ',' << cell(dd.report, t);
    out << "\n";
  }
  if (!out) throw std::runtime_error("gap-curve output write failed");
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Lagrangian dynamic reserve pricing solver"};
  app.require_subcommand(1);

  RunConfig solve_cfg;
  auto* solve = app.add_subcommand("solve", "solve an instance from CSV");
  solve->add_option("--input", solve_cfg.input, "input CSV")->required();
  solve->add_option("--mode", solve_cfg.mode, "domain|general")
      ->check(CLI::IsMember({"domain", "general"}));
  solve->add_option("--tctr", solve_cfg.tctr, "CTR lower threshold");
  solve->add_option("--tgpm", solve_cfg.tgpm, "GPM lower threshold");
  solve->add_option("--tpv", solve_cfg.tpv, "impression cap");
  solve->add_option("--bounds", solve_cfg.bounds, "general-form bounds")
      ->delimiter(',');
  solve->add_option("--algo", solve_cfg.algo, "cd2rp|d3rp")
      ->check(CLI::IsMember({"cd2rp", "d3rp"}));
  solve->add_option("--alpha", solve_cfg.alpha, "d3rp learning rate");
  solve->add_option("--max-iter", solve_cfg.max_iters, "d3rp iteration cap");
  solve->add_option("--max-sweeps", solve_cfg.max_sweeps, "cd2rp sweep cap");
  solve->add_option("--tol", solve_cfg.tol, "convergence threshold");
  solve->add_option("--candidate-mode", solve_cfg.candidate_mode,
                    "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  solve->add_option("--sample-size", solve_cfg.sample_size,
                    "per-shard candidate sample");
  solve->add_option("--shards", solve_cfg.shards, "worker/shard count")
      ->envname("RP_SHARDS");
  solve->add_option("--seed", solve_cfg.seed, "root seed");
  solve->add_option("--out-dir", solve_cfg.out_dir, "output directory");
  solve->add_flag("--clamp-reserve", solve_cfg.clamp_reserve,
                  "report negative reserve prices as 0");

  GenConfig gen_cfg;
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  gen->add_option("--n", gen_cfg.n, "record count")->required();
  gen->add_option("--l", gen_cfg.l, "constraint count");
  gen->add_option("--seed", gen_cfg.seed, "root seed");
  gen->add_option("--fractions", gen_cfg.fractions,
                  "bound fractions of n, one per constraint")
      ->delimiter(',');
  gen->add_option("--output", gen_cfg.output, "output CSV")->required();

  OracleConfig oracle_cfg;
  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum (N <= 25)");
  oracle->add_option("--input", oracle_cfg.input, "input CSV")->required();
  oracle->add_option("--mode", oracle_cfg.mode, "domain|general")
      ->check(CLI::IsMember({"domain", "general"}));
  oracle->add_option("--tctr", oracle_cfg.tctr, "CTR lower threshold");
  oracle->add_option("--tgpm", oracle_cfg.tgpm, "GPM lower threshold");
  oracle->add_option("--tpv", oracle_cfg.tpv, "impression cap");
  oracle->add_option("--bounds", oracle_cfg.bounds, "general-form bounds")
      ->delimiter(',');

  IcCheckConfig ic_cfg;
  auto* ic = app.add_subcommand("ic-check", "incentive compatibility checks");
  ic->add_option("--trials", ic_cfg.trials, "dominance trials");
  ic->add_option("--seed", ic_cfg.seed, "root seed");
  ic->add_flag("--negative-control", ic_cfg.negative_control,
               "bid-dependent reserve; dominance should break");

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "timing table over scales");
  bench->add_option("--scales", bench_cfg.scales, "instance sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--l", bench_cfg.l, "constraint count");
  bench->add_option("--shards-list", bench_cfg.shards_list, "shard counts")
      ->delimiter(',');
  bench->add_option("--algo", bench_cfg.algo, "cd2rp|d3rp")
      ->check(CLI::IsMember({"cd2rp", "d3rp"}));
  bench->add_option("--alpha", bench_cfg.alpha, "d3rp learning rate");
  bench->add_option("--max-iter", bench_cfg.max_iters, "d3rp iteration cap");
  bench->add_option("--max-sweeps", bench_cfg.max_sweeps, "cd2rp sweep cap");
  bench->add_option("--seed", bench_cfg.seed, "root seed");
  bench->add_option("--fractions", bench_cfg.fractions, "bound fractions")
      ->delimiter(',');
  bench->add_option("--output", bench_cfg.output, "output CSV (default stdout)");

  GapCurveConfig curve_cfg;
  auto* curve = app.add_subcommand(
      "gap-curve", "per-iteration relative gaps for both algorithms");
  curve->add_option("--input", curve_cfg.run.input, "input CSV")->required();
  curve->add_option("--mode", curve_cfg.run.mode, "domain|general")
      ->check(CLI::IsMember({"domain", "general"}));
  curve->add_option("--tctr", curve_cfg.run.tctr, "CTR lower threshold");
  curve->add_option("--tgpm", curve_cfg.run.tgpm, "GPM lower threshold");
  curve->add_option("--tpv", curve_cfg.run.tpv, "impression cap");
  curve->add_option("--bounds", curve_cfg.run.bounds, "general-form bounds")
      ->delimiter(',');
  curve->add_option("--iterations", curve_cfg.iterations,
                    "iterations/sweeps to trace");
  curve->add_option("--alpha-grid", curve_cfg.alpha_grid,
                    "d3rp learning rates (default heuristic x 0.5,1,2)")
      ->delimiter(',');
  curve->add_option("--shards", curve_cfg.run.shards, "worker/shard count")
      ->envname("RP_SHARDS");
  curve->add_option("--output", curve_cfg.output, "output CSV (default stdout)");

  int rc = 0;
  solve->callback([&] { rc = cmd_solve(solve_cfg); });
  gen->callback([&] { rc = cmd_gen(gen_cfg); });
  oracle->callback([&] { rc = cmd_oracle(oracle_cfg); });
  ic->callback([&] { rc = cmd_ic_check(ic_cfg); });
  bench->callback([&] { rc = cmd_bench(bench_cfg); });
  curve->callback([&] { rc = cmd_gap_curve(curve_cfg); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("drp");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace drp::cli
