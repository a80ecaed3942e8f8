#pragma once

#include <vector>

#include "mpqp/active_set.hpp"
#include "mpqp/problem.hpp"

namespace mpqp {

enum class PointwiseStatus { Optimal, Infeasible };

struct PointwiseSolution {
  PointwiseStatus status = PointwiseStatus::Infeasible;
  Vector u_star;
  /// Length m, zero on inactive constraints.
  Vector lambda;
  /// Constraints with unit-normal slack at most 1e-8 at u_star.
  ActiveSet active_set;
  int iterations = 0;

  bool optimal() const noexcept { return status == PointwiseStatus::Optimal; }
};

/// Solves min 1/2 |u|^2 s.t. M u <= d(theta) at a fixed parameter with a
/// dual active-set method (working set kept linearly independent, smallest
/// violated index enters, ties on leaving broken by smallest index).
/// Throws IterationLimit if the iteration cap trips.
PointwiseSolution pointwise_solve(const MpLDP& ldp, const Vector& theta);

/// Same, for explicit data.
PointwiseSolution solve_least_distance(const Matrix& M, const Vector& d);

struct KktResiduals {
  double stationarity = 0.0;    // |u + M' lambda|_inf
  double primal = 0.0;          // max(M u - d)_+
  double dual = 0.0;            // max(-lambda)_+
  double complementarity = 0.0; // max |(d - M u)_i lambda_i|

  double worst() const;
};

KktResiduals kkt_residuals(const Matrix& M, const Vector& d, const Vector& u,
                           const Vector& lambda);

/// Every A with |A| <= min(n, m), LICQ and a nonempty region, sorted.
/// Throws TooLarge when m > 24.
std::vector<ActiveSet> brute_force(const MpLDP& ldp, const Tolerances& tol = {});

/// Membership in the set of active sets whose KKT system is solvable for some
/// theta in Theta0, without assuming LICQ: feasibility of
/// {(theta, lambda_A) : -M_A M_A' lambda_A = d_A(theta), lambda_A >= 0,
///  d_I(theta) + M_I M_A' lambda_A >= 0, theta in Theta0}.
bool kkt_solvable(const MpLDP& ldp, const ActiveSet& a, const Tolerances& tol = {});

}  // namespace mpqp
