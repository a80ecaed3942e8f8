#include "mpqp/explorer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "mpqp/errors.hpp"
#include "mpqp/feasibility.hpp"
#include "mpqp/oracle.hpp"

namespace mpqp {

std::vector<ActiveSet> ExplorationResult::active_sets() const {
  std::vector<ActiveSet> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.active_set);
  return out;
}

ExplorationResult explore(const MpLDP& ldp, const ActiveSet& a0,
                          const ExploreOptions& options) {
  const int m = ldp.m();
  const FeasibilityOptions feas{options.tol.eps_feas, options.classify_dimension};

  ExplorationResult result;
  ExplorationCounters& c = result.counters;
  ExploredSet explored(m);
  std::deque<ActiveSet> frontier;
  explored.insert(a0);
  frontier.push_back(a0);

  std::vector<ActiveSet> pushed;
  auto push = [&](const ActiveSet& next, std::size_t& counter) {
    if (explored.insert(next)) {
      frontier.push_back(next);
      pushed.push_back(next);
      ++counter;
    }
  };

  bool first = true;
  while (!frontier.empty()) {
    ActiveSet a;
    if (options.order == PopOrder::DepthFirst) {
      a = std::move(frontier.back());
      frontier.pop_back();
    } else {
      a = std::move(frontier.front());
      frontier.pop_front();
    }
    ++c.popped;
    pushed.clear();

    PopBranch branch;
    NonemptyDecision decision;
    if (licq(ldp, a, options.tol.rank_tol)) {
      CriticalRegionRecord record = build_region(ldp, a);
      ++c.feas_calls;
      decision = decide_nonempty(record.region, feas);
      if (decision.inconclusive) ++c.inconclusive;
      if (decision.nonempty) {
        branch = PopBranch::LicqNonEmpty;
        ++c.nonempty;
        if (decision.lower_dimensional) ++c.lower_dimensional;
        result.records.push_back(std::move(record));
        for (int i : a.complement(m)) push(a.with(i), c.pushed_supersets);
        for (int i : a.indices()) push(a.without(i), c.pushed_subsets);
      } else {
        branch = PopBranch::LicqEmpty;
        ++c.empty;
      }
    } else {
      branch = PopBranch::LicqFail;
      ++c.licq_fail;
      for (int i : a.indices()) push(a.without(i), c.pushed_subsets);
    }

    if (first && branch != PopBranch::LicqNonEmpty) {
      throw BadSeed("starting set " + a.to_string() +
                    (branch == PopBranch::LicqFail ? " fails LICQ"
                                                   : " has an empty region"));
    }
    first = false;

    c.explored = explored.size();
    if (options.on_pop) {
      options.on_pop(PopEvent{a, branch, decision.lower_dimensional,
                              decision.inconclusive, pushed, c});
    }
  }

  c.explored = explored.size();
  std::sort(result.records.begin(), result.records.end(),
            [](const auto& x, const auto& y) { return x.active_set < y.active_set; });
  return result;
}

void write_pop_event(std::ostream& os, const PopEvent& e) {
  const char* branch = e.branch == PopBranch::LicqNonEmpty ? "licq"
                       : e.branch == PopBranch::LicqEmpty  ? "licq"
                                                           : "licq_fail";
  const char* status = e.branch == PopBranch::LicqNonEmpty ? "nonempty"
                       : e.branch == PopBranch::LicqEmpty  ? "empty"
                                                           : "skipped";
  const auto& c = e.counters;
  os << "pop set=" << e.active_set.to_string() << " branch=" << branch
     << " status=" << status;
  if (e.lower_dimensional) os << " thin=1";
  if (e.inconclusive) os << " inconclusive=1";
  os << " pushed=" << e.pushed.size() << " popped=" << c.popped
     << " licq_fail=" << c.licq_fail << " feas_calls=" << c.feas_calls
     << " nonempty=" << c.nonempty << " empty=" << c.empty
     << " explored=" << c.explored << '\n';
}

ActiveSet initial_active_set(const MpLDP& ldp, const Tolerances& tol) {
  const FeasibilityOptions feas{tol.eps_feas, false};
  const FeasibilityResult base = check_nonempty(ldp.theta0(), feas);
  if (!base.nonempty()) throw InfeasibleProblem("parameter set Theta0 is empty");
  const Vector center = *base.witness;

  bool any_optimal = false;
  std::vector<Vector> samples;
  auto attempt = [&](const Vector& theta) -> std::optional<ActiveSet> {
    samples.push_back(theta);
    PointwiseSolution sol;
    try {
      sol = pointwise_solve(ldp, theta);
    } catch (const IterationLimit&) {
      return std::nullopt;
    }
    if (!sol.optimal()) return std::nullopt;
    any_optimal = true;
    if (!licq(ldp, sol.active_set, tol.rank_tol)) return std::nullopt;
    if (!decide_nonempty(build_region(ldp, sol.active_set).region, feas).nonempty) {
      return std::nullopt;
    }
    return sol.active_set;
  };

  if (auto a = attempt(center)) return *a;

  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  double scale = 1e-3 * (1.0 + center.norm());
  for (int k = 0; k < 50; ++k, scale *= 1.2) {
    Vector delta(center.size());
    for (Eigen::Index i = 0; i < delta.size(); ++i) delta(i) = normal(rng);
    const Vector theta = project(ldp.theta0(), center + scale * delta, tol.eps_feas);
    if (auto a = attempt(theta)) return *a;
  }

  const ActiveSet none;
  if (decide_nonempty(build_region(ldp, none).region, feas).nonempty) return none;

  std::ostringstream os;
  os << (any_optimal ? "no starting active set found" : "least-distance problem infeasible")
     << " at " << samples.size() << " samples:";
  for (const auto& s : samples) os << " [" << s.transpose() << ']';
  if (!any_optimal) throw InfeasibleProblem(os.str());
  throw NoStartFound(os.str());
}

std::vector<ActiveSet> valid_sequence(const MpLDP& ldp, const ActiveSet& a,
                                      const ActiveSet& a_tilde,
                                      const Membership& membership,
                                      const Tolerances& tol) {
  std::map<ActiveSet, bool> memo;
  auto member = [&](const ActiveSet& s) {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, membership(s)).first;
    return it->second;
  };
  auto fail = [&](const std::string& why, const std::vector<ActiveSet>& seq) {
    std::ostringstream os;
    os << why << " (from " << a.to_string() << " to " << a_tilde.to_string()
       << ", sequence so far:";
    for (const auto& s : seq) os << ' ' << s.to_string();
    os << ')';
    throw SequenceFailure(os.str());
  };

  std::vector<ActiveSet> seq{a};
  if (!member(a) || !member(a_tilde)) fail("endpoint is not a member", seq);

  std::deque<int> plus;
  std::vector<int> minus;
  std::set_difference(a_tilde.indices().begin(), a_tilde.indices().end(),
                      a.indices().begin(), a.indices().end(),
                      std::back_inserter(plus));
  std::set_difference(a.indices().begin(), a.indices().end(),
                      a_tilde.indices().begin(), a_tilde.indices().end(),
                      std::back_inserter(minus));

  ActiveSet current = a;
  while (!plus.empty() || !minus.empty()) {
    ActiveSet next;
    if (!plus.empty() && licq(ldp, current, tol.rank_tol)) {
      next = current.with(plus.front());
      plus.pop_front();
      if (!member(next)) fail("added set " + next.to_string() + " is not a member", seq);
    } else {
      auto pick = std::find_if(minus.begin(), minus.end(), [&](int i) {
        const ActiveSet candidate = current.without(i);
        return licq(ldp, candidate, tol.rank_tol) && member(candidate);
      });
      if (pick == minus.end()) {
        fail("no removal from " + current.to_string() + " restores LICQ and membership", seq);
      }
      next = current.without(*pick);
      minus.erase(pick);
    }
    seq.push_back(next);
    current = std::move(next);
  }
  return seq;
}

}  // namespace mpqp
