#pragma once

#include <optional>
#include <utility>

#include "mpqp/problem.hpp"

namespace mpqp {

/// Data needed to map least-distance solutions back to the original problem.
///
/// R is the upper-triangular Cholesky factor with R'R = H (not the lower
/// LL' convention); u = R (x + R^{-T} f(theta)).
struct RecoveryData {
  Matrix R;
  AffineMap f;
};

/// Upper Cholesky factor of a symmetric matrix, or nullopt when a pivot falls
/// at or below 1e-12 * trace(H) / n.
std::optional<Matrix> upper_cholesky(const Matrix& H);

/// Rewrites the mpQP as the equivalent least-distance problem with
/// M = A R^{-1} and d(theta) = b(theta) + M R^{-T} f(theta). Uses triangular
/// solves only. Throws CholeskyFailure when H is not positive definite.
std::pair<MpLDP, RecoveryData> to_ldp(const MpQP& qp);

/// theta -> R^{-1} (u(theta) - R^{-T} f(theta)), composed at coefficient level.
AffineMap recover_solution(const RecoveryData& rec, const AffineMap& u_map);

/// Pointwise form of recover_solution.
Vector recover_point(const RecoveryData& rec, const Vector& u,
                     const Vector& theta);

}  // namespace mpqp
