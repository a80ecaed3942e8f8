// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "mpqp/check.hpp"
#include "mpqp/cli.hpp"
#include "mpqp/errors.hpp"
#include "mpqp/explorer.hpp"
#include "mpqp/feasibility.hpp"
#include "mpqp/generator.hpp"
#include "mpqp/io.hpp"
#include "mpqp/oracle.hpp"
#include "mpqp/regions.hpp"
#include "mpqp/solution.hpp"
#include "mpqp/transform.hpp"

namespace fs = std::filesystem;
using namespace mpqp;
using mpqp::testing::CorpusProblem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;
std::multimap<int, std::string> lines;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  lines.emplace(id, std::string(ok ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + " (" +
                        title + "): " + detail);
  if (!ok) ++failures;
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? "; " : "") + items[i];
  if (items.size() > limit) out += "; ...";
  return out;
}

struct CorpusRun {
  const CorpusProblem* problem;
  CheckReport check;
};

void criterion_1_2_4(const std::vector<CorpusProblem>& corpus, std::vector<CorpusRun>& runs) {
  std::set<int> ns, ms, ps;
  int degenerate = 0;
  for (const auto& c : corpus) {
    ns.insert(c.qp.n());
    ms.insert(c.qp.m());
    ps.insert(c.qp.p());
    degenerate += c.degenerate;
  }

  // Criterion 1: set equality, timed separately from the sampling.
  std::vector<std::string> unequal;
  const auto t0 = Clock::now();
  for (const auto& c : corpus) {
    const auto [ldp, rec] = to_ldp(c.qp);
    const ExplorationResult explored = explore(ldp, initial_active_set(ldp));
    const std::vector<ActiveSet> oracle = brute_force(ldp);
    if (explored.active_sets() != oracle) {
      unequal.push_back(c.name + " explore " + std::to_string(explored.records.size()) +
                        " vs brute force " + std::to_string(oracle.size()));
    }
  }
  const double elapsed = seconds_since(t0);
  const bool span_ok = corpus.size() >= 50 && degenerate >= 5 && *ns.begin() == 1 &&
                       *ns.rbegin() == 4 && *ms.begin() >= 2 && *ms.rbegin() <= 14 &&
                       *ps.begin() == 1 && *ps.rbegin() == 3;
  std::ostringstream d1;
  d1 << corpus.size() - unequal.size() << "/" << corpus.size() << " problems equal ("
     << degenerate << " degenerate; n " << *ns.begin() << ".." << *ns.rbegin() << ", m "
     << *ms.begin() << ".." << *ms.rbegin() << ", p " << *ps.begin() << ".." << *ps.rbegin()
     << "), " << elapsed << " s of 60 s";
  if (!unequal.empty()) d1 << "; " << join(unequal);
  report(1, "oracle equivalence", unequal.empty() && span_ok && elapsed < 60.0, d1.str());

  // Criterion 2: 1000 samples per problem through check_problem.
  std::vector<std::string> bad;
  long long samples = 0, optimal = 0, infeasible = 0;
  double worst = 0.0;
  for (const auto& c : corpus) {
    CheckOptions options;
    options.samples = 1000;
    CheckReport r = check_problem(c.qp, options);
    samples += r.samples;
    optimal += r.optimal_samples;
    infeasible += r.infeasible_samples;
    worst = std::max(worst, r.max_deviation);
    if (r.samples != 1000 || r.pointwise_failures || r.coverage_failures) {
      bad.push_back(c.name + " samples=" + std::to_string(r.samples) +
                    " deviation_failures=" + std::to_string(r.pointwise_failures) +
                    " coverage_failures=" + std::to_string(r.coverage_failures));
    }
    runs.push_back({&c, std::move(r)});
  }
  std::ostringstream d2;
  d2 << samples << " samples (" << optimal << " optimal, " << infeasible
     << " infeasible), max |x - x_ref| = " << worst << " (tol 1e-6), violations in "
     << bad.size() << " problems";
  if (!bad.empty()) d2 << "; " << join(bad);
  report(2, "pointwise agreement", bad.empty(), d2.str());

  // Criterion 4: degenerate problems still match and exercise thin regions.
  std::vector<std::string> bad4;
  std::ostringstream d4;
  int checked = 0;
  for (const auto& run : runs) {
    if (!run.problem->degenerate) continue;
    ++checked;
    const auto& r = run.check;
    d4 << (checked > 1 ? ", " : "") << run.problem->name << " thin=" << r.counters.lower_dimensional
       << "/" << r.counters.nonempty;
    if (!r.sets_equal() || r.counters.lower_dimensional == 0) bad4.push_back(run.problem->name);
  }
  report(4, "degenerate handling", checked >= 5 && bad4.empty(),
         std::to_string(checked - static_cast<int>(bad4.size())) + "/" + std::to_string(checked) +
             " degenerate problems equal with lower-dimensional regions [" + d4.str() + "]");
}

double interval_end(const Polyhedron& P, bool upper) {
  double v = upper ? INFINITY : -INFINITY;
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    const double a = P.G()(i, 0);
    if (upper && a > 0) v = std::min(v, P.g()(i) / a);
    if (!upper && a < 0) v = std::max(v, P.g()(i) / a);
  }
  return v;
}

void criterion_3(const fs::path& dir) {
  const fs::path problem = dir / "one_d.json";
  const fs::path solution = dir / "one_d_solution.json";
  save_problem(testing::one_d_example(), problem.string());
  std::ostringstream out, err;
  const int code = run_cli({"mpqp", "solve", problem.string(), "-o", solution.string()}, out, err);
  if (code != 0) {
    report(3, "worked 1D example", false, "solve exited " + std::to_string(code) + ": " + err.str());
    return;
  }
  const ExplicitSolution sol = load_solution(solution.string());
  std::ostringstream d;
  bool ok = sol.records.size() == 2;
  d << sol.records.size() << " records";
  if (ok) {
    // Records are sorted: {} then {1}.
    const auto& free = sol.records[0];
    const auto& bound = sol.records[1];
    ok = free.active_set == ActiveSet{} && bound.active_set == ActiveSet{0};
    const double lo_free = interval_end(free.region, false);
    const double hi_free = interval_end(free.region, true);
    const double lo_bound = interval_end(bound.region, false);
    const double hi_bound = interval_end(bound.region, true);
    const double breakpoint = hi_free;
    ok = ok && std::abs(hi_free - 0.0) <= 1e-9 && std::abs(lo_bound - 0.0) <= 1e-9 &&
         std::abs(lo_free + 0.5) <= 1e-9 && std::abs(hi_bound - 2.0) <= 1e-9;
    // x = theta on the free side, x = 0 where x <= 0 binds.
    const bool laws = std::abs(free.x_map.coeff()(0, 0) - 1.0) <= 1e-12 &&
                      std::abs(free.x_map.offset()(0)) <= 1e-12 &&
                      std::abs(bound.x_map.coeff()(0, 0)) <= 1e-12 &&
                      std::abs(bound.x_map.offset()(0)) <= 1e-12 &&
                      std::abs(bound.lambda_map.coeff()(0, 0) - 1.0) <= 1e-12;
    // Cross-check against the independent KKT enumeration at sample points.
    bool oracle = true;
    for (double t : {-0.5, -0.25, -1e-3, 0.0, 1e-3, 0.75, 1.5, 2.0}) {
      const Vector theta = Vector::Constant(1, t);
      const auto ref = testing::reference_solution(testing::one_d_example(), theta);
      const Evaluation e = evaluate(sol, theta);
      oracle = oracle && ref && std::abs((*ref)(0) - e.x(0)) <= 1e-9;
    }
    ok = ok && laws && oracle;
    d << " {} on [" << lo_free << ", " << hi_free << "] with x = " << free.x_map.coeff()(0, 0)
      << " theta + " << free.x_map.offset()(0) << ", {1} on [" << lo_bound << ", " << hi_bound
      << "] with x = " << bound.x_map.coeff()(0, 0) << " theta + " << bound.x_map.offset()(0)
      << ", breakpoint " << breakpoint << ", oracle agreement " << (oracle ? "yes" : "no");
  }
  report(3, "worked 1D example", ok, d.str());
}

void criterion_5(const std::vector<CorpusProblem>& corpus) {
  int pairs = 0, problems = 0, incidents = 0;
  std::size_t longest = 0;
  std::vector<std::string> bad;
  for (const auto& c : corpus) {
    if (c.qp.m() > 10) continue;
    ++problems;
    const auto [ldp, rec] = to_ldp(c.qp);
    const std::vector<ActiveSet> sets = brute_force(ldp);
    std::vector<CriticalRegionRecord> records;
    for (const auto& a : sets) records.push_back(build_region(ldp, a));
    std::map<ActiveSet, bool> licq_memo, member_memo;
    auto member = [&](const ActiveSet& a) {
      auto it = member_memo.find(a);
      if (it == member_memo.end()) it = member_memo.emplace(a, kkt_solvable(ldp, a)).first;
      return it->second;
    };
    auto in_licq = [&](const ActiveSet& a) { return licq(ldp, a) && member(a); };

    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        const Polyhedron both = records[i].region.intersect(records[j].region);
        if (!decide_nonempty(both, FeasibilityOptions{}).nonempty) continue;
        ++pairs;
        for (const auto& [from, to] : {std::pair{i, j}, std::pair{j, i}}) {
          std::vector<ActiveSet> seq;
          try {
            seq = valid_sequence(ldp, sets[from], sets[to], member);
          } catch (const SequenceFailure& e) {
            ++incidents;
            bad.push_back(c.name + ": " + e.what());
            continue;
          }
          longest = std::max(longest, seq.size());
          bool valid = seq.front() == sets[from] && seq.back() == sets[to];
          for (const auto& s : seq) valid = valid && member(s);
          for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            valid = valid && adjacent(seq[k], seq[k + 1]) &&
                    (in_licq(seq[k]) || in_licq(seq[k + 1]));
          }
          if (!valid) {
            ++incidents;
            bad.push_back(c.name + ": invalid sequence " + sets[from].to_string() + " -> " +
                          sets[to].to_string());
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " geometrically adjacent pairs on " << problems
    << " problems with m <= 10, both directions, " << incidents
    << " incidents, longest sequence " << longest;
  if (!bad.empty()) d << "; " << join(bad, 3);
  report(5, "connectedness witness", incidents == 0 && pairs > 0, d.str());
}

void criterion_6(const fs::path& dir) {
  const MpQP qp = generate_mpc(MpcKind::DoubleIntegrator, 5, 0);
  const auto [ldp, rec] = to_ldp(qp);
  const auto t0 = Clock::now();
  const ExplorationResult r = explore(ldp, initial_active_set(ldp));
  const double elapsed = seconds_since(t0);
  const double budget = 0.02 * std::ldexp(1.0, qp.m());

  const fs::path path = dir / "double_integrator_N5.json";
  save_problem(qp, path.string());
  std::ostringstream out, err;
  const int code = run_cli({"mpqp", "check", path.string()}, out, err);
  std::string line;
  std::istringstream lines(out.str());
  std::string stats;
  while (std::getline(lines, line)) {
    if (line.rfind("exploration:", 0) == 0) stats = line;
  }
  const bool reported = stats.find("feas_calls=") != std::string::npos &&
                        stats.find("|E|=") != std::string::npos &&
                        stats.find("|A*|=") != std::string::npos;
  std::ostringstream d;
  d << "m=" << qp.m() << ", explore " << elapsed << " s (budget 10 s), feas_calls="
    << r.counters.feas_calls << " < " << budget << ", |E|=" << r.counters.explored
    << ", |A*|=" << r.records.size() << "; check exit " << code << ", report line: " << stats;
  report(6, "pruning effectiveness",
         elapsed < 10.0 && static_cast<double>(r.counters.feas_calls) < budget && reported &&
             code == 0,
         d.str());
}

void criterion_7(const std::vector<CorpusProblem>& corpus, const fs::path& dir) {
  std::mt19937_64 rng(7);
  double worst_stationarity = 0.0;  // coefficient level, must be exactly 0
  double worst_kkt = 0.0;
  double worst_linearity = 0.0;
  long long kkt_points = 0;
  int roundtrip_failures = 0;
  std::vector<std::string> bad;

  for (const auto& c : corpus) {
    const auto [ldp, rec] = to_ldp(c.qp);
    const ExplicitSolution sol = solve(c.qp);
    const ExplorationResult explored = explore(ldp, initial_active_set(ldp));
    const BoundingBox box = bounding_box(c.qp.theta0());

    for (const auto& r : explored.records) {
      const Matrix MA = active_rows(ldp, r.active_set);
      const AffineMap stat = r.u_map + r.lambda_map.left_multiply(MA.transpose());
      const double s = std::max(stat.coeff().size() ? stat.coeff().cwiseAbs().maxCoeff() : 0.0,
                                stat.offset().size() ? stat.offset().cwiseAbs().maxCoeff() : 0.0);
      worst_stationarity = std::max(worst_stationarity, s);

      int inside = 0;
      for (int k = 0; k < 2000 && inside < 20; ++k) {
        const Vector theta = testing::sample_box(rng, box.lower, box.upper);
        if (!r.region.contains(theta, 0.0)) continue;
        ++inside;
        Vector lambda = Vector::Zero(ldp.m());
        const Vector la = r.lambda_map.eval(theta);
        for (std::size_t i = 0; i < r.active_set.size(); ++i) {
          lambda(r.active_set.indices()[i]) = la(static_cast<Eigen::Index>(i));
        }
        const KktResiduals res = kkt_residuals(ldp.M(), ldp.d().eval(theta), r.u_map.eval(theta), lambda);
        worst_kkt = std::max(worst_kkt, res.worst());
        ++kkt_points;
      }
    }

    for (int k = 0; k < 200; ++k) {
      const Vector theta = testing::sample_box(rng, box.lower, box.upper);
      const PointwiseSolution ps = pointwise_solve(ldp, theta);
      if (!ps.optimal()) continue;
      worst_kkt = std::max(worst_kkt, kkt_residuals(ldp.M(), ldp.d().eval(theta), ps.u_star, ps.lambda).worst());
      ++kkt_points;
    }

    // Linearity of d and of every x-law.
    std::vector<const AffineMap*> maps{&ldp.d()};
    for (const auto& r : sol.records) maps.push_back(&r.x_map);
    for (const AffineMap* map : maps) {
      const Vector t1 = testing::sample_box(rng, box.lower, box.upper);
      const Vector t2 = testing::sample_box(rng, box.lower, box.upper);
      const double a = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
      const Vector lhs = map->eval(a * t1 + (1 - a) * t2);
      const Vector rhs = a * map->eval(t1) + (1 - a) * map->eval(t2);
      if (lhs.size()) {
        const double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
        worst_linearity = std::max(worst_linearity, (lhs - rhs).cwiseAbs().maxCoeff() / scale);
      }
    }

    const std::string text1 = to_text(solution_to_json(sol));
    const fs::path file = dir / (c.name + "_solution.json");
    save_solution(sol, file.string());
    const std::string text2 = to_text(solution_to_json(load_solution(file.string())));
    std::ifstream in(file);
    const std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (text1 != text2 || text1 != on_disk) {
      ++roundtrip_failures;
      bad.push_back(c.name + " round trip");
    }
  }

  std::ostringstream d;
  d << "coefficient stationarity max " << worst_stationarity << " (exact 0), KKT residual max "
    << worst_kkt << " over " << kkt_points << " points (tol 1e-8), linearity max "
    << worst_linearity << " (tol 1e-12), round-trip failures " << roundtrip_failures << "/"
    << corpus.size();
  if (!bad.empty()) d << "; " << join(bad);
  report(7, "numerical invariants",
         worst_stationarity == 0.0 && worst_kkt <= 1e-8 && worst_linearity <= 1e-12 &&
             roundtrip_failures == 0,
         d.str());
}

}  // namespace

int main() {
  const fs::path dir = fs::temp_directory_path() / "mpqp_acceptance";
  fs::create_directories(dir);
  const std::vector<CorpusProblem> corpus = testing::corpus();

  std::vector<CorpusRun> runs;
  auto guarded = [](int id, const std::string& title, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report(id, title, false, std::string("threw ") + e.what());
    }
  };
  guarded(1, "oracle equivalence / pointwise agreement / degenerate handling",
          [&] { criterion_1_2_4(corpus, runs); });
  guarded(3, "worked 1D example", [&] { criterion_3(dir); });
  guarded(5, "connectedness witness", [&] { criterion_5(corpus); });
  guarded(6, "pruning effectiveness", [&] { criterion_6(dir); });
  guarded(7, "numerical invariants", [&] { criterion_7(corpus, dir); });

  for (const auto& [id, line] : lines) std::cout << line << '\n';
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
