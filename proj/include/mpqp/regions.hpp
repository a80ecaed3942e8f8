#pragma once

#include "mpqp/active_set.hpp"
#include "mpqp/problem.hpp"

namespace mpqp {

/// One piece of the explicit solution: an active set, the parameters where it
/// is optimal, and the affine laws valid there.
struct CriticalRegionRecord {
  ActiveSet active_set;
  /// Inactive slacks >= 0, then multipliers >= 0, then the Theta0 rows.
  Polyhedron region;
  /// Multipliers of the active constraints, in increasing index order.
  AffineMap lambda_map;
  /// Least-distance optimizer u*(theta).
  AffineMap u_map;
  /// Original-problem optimizer x*(theta); filled by the caller through
  /// recover_solution, empty until then.
  AffineMap x_map;
};

/// Rows of M indexed by the set.
Matrix active_rows(const MpLDP& ldp, const ActiveSet& a);

/// True iff M_A has full row rank, decided by column-pivoted QR of M_A' with
/// pivots compared against rank_tol times the largest row norm of M_A.
/// Sets larger than n fail immediately; the empty set passes.
bool licq(const MpLDP& ldp, const ActiveSet& a, double rank_tol = 1e-10);

/// lambda_A(theta) = -(M_A M_A')^{-1} d_A(theta), through a Cholesky factor of
/// the Gram matrix. Throws GramSingular if that factorization fails.
AffineMap dual_map(const MpLDP& ldp, const ActiveSet& a);

/// u*(theta) = -M_A' lambda_A(theta).
AffineMap primal_map(const MpLDP& ldp, const ActiveSet& a,
                     const AffineMap& lambda);

/// mu(theta) = d_I(theta) - M_I u*(theta) over the inactive indices I,
/// increasing.
AffineMap slack_map(const MpLDP& ldp, const ActiveSet& a, const AffineMap& u);

/// Assembles the record for a set that satisfies LICQ. x_map is left empty.
///
/// Entries of the slack and multiplier rows that are pure cancellation noise
/// (below 1e-11 of the magnitude of the terms that produced them) are set to
/// exact zero, so identically-zero laws become vacuous rows instead of
/// spurious half-spaces after row normalization. No other row processing is
/// done: redundant rows stay.
CriticalRegionRecord build_region(const MpLDP& ldp, const ActiveSet& a);

}  // namespace mpqp
