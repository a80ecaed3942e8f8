#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mpqp/active_set.hpp"
#include "mpqp/explorer.hpp"
#include "mpqp/problem.hpp"
#include "mpqp/transform.hpp"

namespace mpqp {

struct SolutionRecord {
  ActiveSet active_set;
  /// Self-contained: includes the Theta0 rows.
  Polyhedron region;
  /// x*(theta) in the original variables.
  AffineMap x_map;
  AffineMap lambda_map;
};

/// The piecewise-affine solution of an mpQP together with what produced it.
struct ExplicitSolution {
  std::string problem_hash;
  int n = 0;
  int m = 0;
  int p = 0;
  Polyhedron theta0;
  std::vector<SolutionRecord> records;
  RecoveryData recovery;
  ExplorationCounters stats;
  Tolerances tolerances;
};

struct SolveOptions {
  Tolerances tol;
  PopOrder order = PopOrder::DepthFirst;
  /// When set, one line per popped active set is written here.
  std::ostream* log = nullptr;
};

/// Transform, initialize, explore, and map every record back to x-space.
ExplicitSolution solve(const MpQP& qp, const SolveOptions& options = {});

struct Evaluation {
  Vector x;
  std::size_t record = 0;
  double violation = 0.0;
};

/// Index of the owning record: among regions containing theta within
/// eps_feas (unit-normal rows), the one with the smallest largest violation;
/// ties go to the smaller active set. nullopt when no region contains theta.
std::optional<std::size_t> locate(const ExplicitSolution& sol, const Vector& theta);

/// Throws OutsideSolution when locate finds nothing, DimensionMismatch on a
/// wrong-length theta.
Evaluation evaluate(const ExplicitSolution& sol, const Vector& theta);

}  // namespace mpqp
