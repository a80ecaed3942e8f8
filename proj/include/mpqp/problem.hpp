#pragma once

#include "mpqp/affine_map.hpp"
#include "mpqp/polyhedron.hpp"

namespace mpqp {

/// Numerical tolerances shared by the solver pipeline.
struct Tolerances {
  /// Feasibility tolerance, in units of unit-normal rows.
  double eps_feas = 1e-8;
  /// Relative rank threshold for the LICQ test.
  double rank_tol = 1e-10;
};

/// minimize 1/2 x'Hx + f(theta)'x  subject to  A x <= b(theta), theta in Theta0.
///
/// H must be symmetric positive definite. Input with a small asymmetry
/// (|H - H'|_max <= 1e-10 (1 + |H|_max)) is accepted and symmetrized.
class MpQP {
 public:
  MpQP(Matrix H, AffineMap f, Matrix A, AffineMap b, Polyhedron theta0);

  const Matrix& H() const noexcept { return H_; }
  const AffineMap& f() const noexcept { return f_; }
  const Matrix& A() const noexcept { return A_; }
  const AffineMap& b() const noexcept { return b_; }
  const Polyhedron& theta0() const noexcept { return theta0_; }

  int n() const noexcept { return static_cast<int>(H_.rows()); }
  int m() const noexcept { return static_cast<int>(A_.rows()); }
  int p() const noexcept { return static_cast<int>(theta0_.dim()); }

 private:
  Matrix H_;
  AffineMap f_;
  Matrix A_;
  AffineMap b_;
  Polyhedron theta0_;
};

/// minimize 1/2 |u|^2  subject to  M u <= d(theta), theta in Theta0.
class MpLDP {
 public:
  MpLDP(Matrix M, AffineMap d, Polyhedron theta0);

  const Matrix& M() const noexcept { return M_; }
  const AffineMap& d() const noexcept { return d_; }
  const Polyhedron& theta0() const noexcept { return theta0_; }

  int n() const noexcept { return static_cast<int>(M_.cols()); }
  int m() const noexcept { return static_cast<int>(M_.rows()); }
  int p() const noexcept { return static_cast<int>(theta0_.dim()); }

 private:
  Matrix M_;
  AffineMap d_;
  Polyhedron theta0_;
};

}  // namespace mpqp
