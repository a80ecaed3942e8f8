#include "mpqp/solution.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "mpqp/errors.hpp"
#include "mpqp/io.hpp"

namespace mpqp {

ExplicitSolution solve(const MpQP& qp, const SolveOptions& options) {
  auto [ldp, rec] = to_ldp(qp);
  const ActiveSet a0 = initial_active_set(ldp, options.tol);

  ExploreOptions explore_options;
  explore_options.tol = options.tol;
  explore_options.order = options.order;
  if (options.log) {
    std::ostream* log = options.log;
    explore_options.on_pop = [log](const PopEvent& e) { write_pop_event(*log, e); };
  }
  ExplorationResult explored = explore(ldp, a0, explore_options);

  ExplicitSolution sol;
  sol.problem_hash = problem_digest(qp);
  sol.n = qp.n();
  sol.m = qp.m();
  sol.p = qp.p();
  sol.theta0 = qp.theta0();
  sol.stats = explored.counters;
  sol.tolerances = options.tol;
  sol.records.reserve(explored.records.size());
  for (auto& r : explored.records) {
    sol.records.push_back(SolutionRecord{r.active_set, std::move(r.region),
                                         recover_solution(rec, r.u_map),
                                         std::move(r.lambda_map)});
  }
  sol.recovery = std::move(rec);
  return sol;
}

std::optional<std::size_t> locate(const ExplicitSolution& sol, const Vector& theta) {
  if (theta.size() != sol.p) {
    throw DimensionMismatch("theta has " + std::to_string(theta.size()) +
                            " entries, solution expects " + std::to_string(sol.p));
  }
  std::optional<std::size_t> best;
  double best_violation = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sol.records.size(); ++k) {
    const double v = sol.records[k].region.max_normalized_violation(theta);
    if (v > sol.tolerances.eps_feas) continue;
    // Records are sorted by active set, so a strict comparison keeps the
    // smaller set on ties.
    if (!best || v < best_violation) {
      best = k;
      best_violation = v;
    }
  }
  return best;
}

Evaluation evaluate(const ExplicitSolution& sol, const Vector& theta) {
  const auto k = locate(sol, theta);
  if (!k) {
    std::ostringstream os;
    os << "theta = [" << theta.transpose() << "] lies in no critical region";
    throw OutsideSolution(os.str());
  }
  const SolutionRecord& r = sol.records[*k];
  return Evaluation{r.x_map.eval(theta), *k,
                    r.region.max_normalized_violation(theta)};
}

}  // namespace mpqp
