#include "mpqp/cli.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>

#include <CLI11.hpp>

#include "mpqp/check.hpp"
#include "mpqp/errors.hpp"
#include "mpqp/generator.hpp"
#include "mpqp/io.hpp"
#include "mpqp/plot.hpp"
#include "mpqp/solution.hpp"

namespace mpqp {

namespace {

void write_counters(std::ostream& os, const ExplorationCounters& c) {
  os << "popped=" << c.popped << " licq_fail=" << c.licq_fail
     << " feas_calls=" << c.feas_calls << " nonempty=" << c.nonempty
     << " empty=" << c.empty << " thin=" << c.lower_dimensional
     << " inconclusive=" << c.inconclusive << " explored=" << c.explored << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit solutions of multi-parametric quadratic programs", "mpqp"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  Tolerances tol;
  bool log = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the explicit solution of a problem file");
  solve_cmd->add_option("problem", in_path, "Problem file")->required();
  solve_cmd->add_option("-o,--out", out_path, "Solution file")->required();
  solve_cmd->add_option("--eps-feas", tol.eps_feas, "Feasibility tolerance");
  solve_cmd->add_option("--rank-tol", tol.rank_tol, "Relative LICQ rank threshold");
  solve_cmd->add_flag("--log", log, "Print one line per explored active set");

  std::vector<double> theta;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a solution at a parameter");
  eval_cmd->add_option("solution", in_path, "Solution file")->required();
  eval_cmd->add_option("--theta", theta, "Parameter, comma separated")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);

  CheckOptions check_options;
  auto* check_cmd = app.add_subcommand("check", "Compare exploration with exhaustive enumeration");
  check_cmd->add_option("problem", in_path, "Problem file")->required();
  check_cmd->add_option("--eps-feas", check_options.solve_tol.eps_feas,
                        "Feasibility tolerance of the solve under test");
  check_cmd->add_option("--rank-tol", check_options.solve_tol.rank_tol,
                        "LICQ rank threshold of the solve under test");
  check_cmd->add_option("--samples", check_options.samples, "Pointwise samples");
  check_cmd->add_option("--seed", check_options.seed, "Sampling seed");

  std::string kind;
  int horizon = 0;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a condensed MPC problem");
  gen_cmd->add_option("--kind", kind, "double_integrator or random_stable")->required();
  gen_cmd->add_option("--horizon", horizon, "Prediction horizon")->required();
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("-o,--out", out_path, "Problem file")->required();

  PlotOptions plot_options;
  auto* plot_cmd = app.add_subcommand("plot2d", "Draw the partition of a two-parameter solution");
  plot_cmd->add_option("solution", in_path, "Solution file")->required();
  plot_cmd->add_option("-o,--out", out_path, "SVG file")->required();
  plot_cmd->add_option("--grid", plot_options.grid, "Cells per axis");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) {
      const MpQP qp = load_problem(in_path);
      SolveOptions options;
      options.tol = tol;
      if (log) options.log = &out;
      const auto t0 = std::chrono::steady_clock::now();
      const ExplicitSolution sol = solve(qp, options);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      save_solution(sol, out_path);
      out << "active sets: " << sol.records.size() << '\n';
      write_counters(out, sol.stats);
      out << "wall time: " << seconds << " s\n";
      return 0;
    }
    if (*eval_cmd) {
      const ExplicitSolution sol = load_solution(in_path);
      const Vector t = Eigen::Map<const Vector>(theta.data(), static_cast<Eigen::Index>(theta.size()));
      const Evaluation e = evaluate(sol, t);
      nlohmann::json doc;
      doc["x"] = std::vector<double>(e.x.data(), e.x.data() + e.x.size());
      doc["active_set"] = sol.records[e.record].active_set.one_based();
      doc["record"] = e.record;
      out << doc.dump() << '\n';
      return 0;
    }
    if (*check_cmd) {
      const MpQP qp = load_problem(in_path);
      const CheckReport report = check_problem(qp, check_options);
      write_check_report(out, report, qp.m());
      return report.passed() ? 0 : static_cast<int>(ErrorCategory::Numerical);
    }
    if (*gen_cmd) {
      const MpQP qp = generate_mpc(parse_mpc_kind(kind), horizon, seed);
      save_problem(qp, out_path);
      out << "wrote " << out_path << " (n=" << qp.n() << " m=" << qp.m()
          << " p=" << qp.p() << ")\n";
      return 0;
    }
    if (*plot_cmd) {
      const ExplicitSolution sol = load_solution(in_path);
      const PlotSummary s = plot2d(sol, out_path, plot_options);
      out << "wrote " << out_path << " and " << out_path << ".legend.txt: "
          << s.colored_cells << " colored cells, " << s.background_cells
          << " background cells, " << s.legend_rows << " legend rows\n";
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorCategory::Numerical);
  }
  return 1;
}

}  // namespace mpqp
