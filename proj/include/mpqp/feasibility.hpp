#pragma once

#include <optional>

#include "mpqp/polyhedron.hpp"

namespace mpqp {

enum class FeasibilityStatus { NonEmpty, Empty };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::Empty;
  /// Minimum-norm point of the (slightly relaxed) polyhedron; set iff NonEmpty.
  std::optional<Vector> witness;
  /// Largest unit-normal row violation at the witness.
  double max_violation = 0.0;
  /// Set iff Empty: y >= 0 over the input rows with y'G ~ 0 and y'g < 0.
  std::optional<Vector> certificate;
  /// Only meaningful when dimension classification was requested: the set is
  /// nonempty but holds no ball of radius `kThinMargin`.
  bool lower_dimensional = false;

  bool nonempty() const noexcept { return status == FeasibilityStatus::NonEmpty; }
};

struct FeasibilityOptions {
  double eps_feas = 1e-8;
  bool classify_dimension = false;
};

/// Ball radius (unit-normal rows) below which a nonempty set is reported as
/// lower-dimensional.
inline constexpr double kThinMargin = 1e-6;

/// Decides whether {theta : G theta <= g} is nonempty by computing its
/// minimum-norm point.
///
/// Rows are scaled to unit normals, then relaxed by eps_feas / 2, and the
/// least-distance problem min |theta|^2 over the relaxed set is solved as a
/// nonnegative least-squares problem on its dual (Lawson-Hanson). A feasible
/// dual residual yields the witness; a vanishing residual yields the Farkas
/// multipliers. No interior point is required, so sets of lower dimension
/// (for example a segment in the plane) are reported NonEmpty.
///
/// Throws IterationLimit if the active-set iteration does not settle or if
/// neither a witness nor a certificate can be confirmed.
FeasibilityResult check_nonempty(const Polyhedron& P,
                                 const FeasibilityOptions& options);
FeasibilityResult check_nonempty(const Polyhedron& P, double eps_feas = 1e-8);

/// Outcome of the conservative nonemptiness policy used during exploration.
struct NonemptyDecision {
  bool nonempty = false;
  bool lower_dimensional = false;
  /// check_nonempty failed to conclude; the region is treated as nonempty.
  bool inconclusive = false;
};

/// check_nonempty with IterationLimit mapped to "nonempty, inconclusive".
NonemptyDecision decide_nonempty(const Polyhedron& P,
                                 const FeasibilityOptions& options);

/// Euclidean projection of `point` onto P. Throws InfeasibleProblem if P is
/// empty.
Vector project(const Polyhedron& P, const Vector& point, double eps_feas = 1e-8);

struct BoundingBox {
  Vector lower;
  Vector upper;
};

/// Per-coordinate extent of a nonempty polyhedron, found by bisection on
/// feasibility of P intersected with half-spaces. Throws Unbounded if a
/// coordinate exceeds 1e12 in magnitude and InfeasibleProblem if P is empty.
BoundingBox bounding_box(const Polyhedron& P, double eps_feas = 1e-8);

/// Nonnegative least squares, min |E x - f| subject to x >= 0.
/// Exposed for tests; throws IterationLimit.
Vector nnls(const Matrix& E, const Vector& f);

}  // namespace mpqp
