#include "mpqp/check.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <ostream>
#include <random>

#include "mpqp/errors.hpp"
#include "mpqp/feasibility.hpp"
#include "mpqp/oracle.hpp"
#include "mpqp/solution.hpp"

namespace mpqp {

CheckReport check_problem(const MpQP& qp, const CheckOptions& options) {
  if (qp.m() > 24) {
    throw TooLarge("check is limited to m <= 24, got " + std::to_string(qp.m()));
  }
  CheckReport report;

  const auto t0 = std::chrono::steady_clock::now();
  SolveOptions solve_options;
  solve_options.tol = options.solve_tol;
  const ExplicitSolution sol = solve(qp, solve_options);
  report.solve_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report.counters = sol.stats;
  for (const auto& r : sol.records) report.explored_sets.push_back(r.active_set);

  const auto [ldp, rec] = to_ldp(qp);
  report.oracle_sets = brute_force(ldp, options.oracle_tol);
  std::set_difference(report.oracle_sets.begin(), report.oracle_sets.end(),
                      report.explored_sets.begin(), report.explored_sets.end(),
                      std::back_inserter(report.missing));
  std::set_difference(report.explored_sets.begin(), report.explored_sets.end(),
                      report.oracle_sets.begin(), report.oracle_sets.end(),
                      std::back_inserter(report.extra));

  const BoundingBox box = bounding_box(qp.theta0(), options.oracle_tol.eps_feas);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const long long max_draws = 1000LL * std::max(options.samples, 1);
  Vector theta(qp.p());
  for (long long draw = 0; report.samples < options.samples && draw < max_draws; ++draw) {
    for (Eigen::Index j = 0; j < theta.size(); ++j) {
      theta(j) = box.lower(j) + (box.upper(j) - box.lower(j)) * unit(rng);
    }
    if (!qp.theta0().contains(theta, 0.0)) continue;
    ++report.samples;

    const PointwiseSolution ref = pointwise_solve(ldp, theta);
    const auto owner = locate(sol, theta);
    if (!ref.optimal()) {
      ++report.infeasible_samples;
      if (owner) ++report.coverage_failures;
      continue;
    }
    ++report.optimal_samples;
    if (!owner) {
      ++report.pointwise_failures;
      continue;
    }
    const Vector x_ref = recover_point(rec, ref.u_star, theta);
    const Vector x = sol.records[*owner].x_map.eval(theta);
    const double dev = (x - x_ref).cwiseAbs().maxCoeff();
    report.max_deviation = std::max(report.max_deviation, dev);
    if (!(dev <= options.x_tol)) ++report.pointwise_failures;
  }
  return report;
}

namespace {

void write_sets(std::ostream& os, const std::vector<ActiveSet>& sets) {
  for (const auto& s : sets) os << ' ' << s.to_string();
}

}  // namespace

void write_check_report(std::ostream& os, const CheckReport& r, int m) {
  const auto& c = r.counters;
  os << "active sets: explore " << r.explored_sets.size() << ", brute force "
     << r.oracle_sets.size() << '\n';
  if (r.sets_equal()) {
    os << "set equality: PASS (" << r.explored_sets.size() << " = "
       << r.oracle_sets.size() << ")\n";
  } else {
    os << "set equality: FAIL";
    if (!r.missing.empty()) {
      os << " missing from explore:";
      write_sets(os, r.missing);
    }
    if (!r.extra.empty()) {
      os << " extra in explore:";
      write_sets(os, r.extra);
    }
    os << '\n';
  }
  os << "exploration: feas_calls=" << c.feas_calls << " |E|=" << c.explored
     << " |A*|=" << c.nonempty << " popped=" << c.popped
     << " licq_fail=" << c.licq_fail << " empty=" << c.empty
     << " thin=" << c.lower_dimensional << " inconclusive=" << c.inconclusive
     << " feas_calls/2^m=" << static_cast<double>(c.feas_calls) / std::ldexp(1.0, m)
     << " time=" << r.solve_seconds << "s\n";
  os << "pointwise: " << (r.pointwise_failures == 0 && r.coverage_failures == 0 ? "PASS" : "FAIL")
     << " samples=" << r.samples << " optimal=" << r.optimal_samples
     << " infeasible=" << r.infeasible_samples << " max_deviation=" << r.max_deviation
     << " deviation_failures=" << r.pointwise_failures
     << " coverage_failures=" << r.coverage_failures << '\n';
  os << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace mpqp
