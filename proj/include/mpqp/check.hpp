#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mpqp/active_set.hpp"
#include "mpqp/explorer.hpp"
#include "mpqp/problem.hpp"

namespace mpqp {

struct CheckOptions {
  /// Tolerances of the explicit solve under test.
  Tolerances solve_tol;
  /// Tolerances of the exhaustive reference.
  Tolerances oracle_tol;
  int samples = 1000;
  std::uint64_t seed = 1;
  double x_tol = 1e-6;
};

struct CheckReport {
  std::vector<ActiveSet> explored_sets;
  std::vector<ActiveSet> oracle_sets;
  /// Found by exhaustive enumeration only.
  std::vector<ActiveSet> missing;
  /// Found by exploration only.
  std::vector<ActiveSet> extra;
  ExplorationCounters counters;
  double solve_seconds = 0.0;

  int samples = 0;
  int optimal_samples = 0;
  int infeasible_samples = 0;
  /// Largest |x_explicit - x_pointwise|_inf over optimal samples.
  double max_deviation = 0.0;
  /// Optimal samples off every region, or over x_tol.
  int pointwise_failures = 0;
  /// Infeasible samples that point location still assigned to a region.
  int coverage_failures = 0;

  bool sets_equal() const { return missing.empty() && extra.empty(); }
  bool passed() const {
    return sets_equal() && pointwise_failures == 0 && coverage_failures == 0;
  }
};

/// Compares the explicit solution against exhaustive enumeration and against
/// pointwise solves at samples drawn uniformly from the bounding box of
/// Theta0 (samples outside Theta0 are discarded and redrawn).
///
/// Throws TooLarge when m > 24.
CheckReport check_problem(const MpQP& qp, const CheckOptions& options = {});

void write_check_report(std::ostream& os, const CheckReport& report, int m);

}  // namespace mpqp
