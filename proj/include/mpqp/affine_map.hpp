#pragma once

#include <vector>

#include <Eigen/Dense>

namespace mpqp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// An affine function of the parameter, v(theta) = offset + coeff * theta.
///
/// Every parameter-dependent quantity in the library (linear cost, constraint
/// offsets, multipliers, primal and slack laws) is carried in this form so
/// that compositions happen once at the coefficient level.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(Matrix coeff, Vector offset);

  /// Constant map of `rows` outputs over `params` parameters.
  static AffineMap constant(Vector offset, Eigen::Index params);
  static AffineMap zero(Eigen::Index rows, Eigen::Index params);

  const Matrix& coeff() const noexcept { return coeff_; }
  const Vector& offset() const noexcept { return offset_; }
  Eigen::Index rows() const noexcept { return offset_.size(); }
  Eigen::Index params() const noexcept { return coeff_.cols(); }

  Vector eval(const Eigen::Ref<const Vector>& theta) const;

  /// theta -> K * v(theta).
  AffineMap left_multiply(const Eigen::Ref<const Matrix>& k) const;
  AffineMap select_rows(const std::vector<int>& rows) const;
  AffineMap operator-() const;

  friend AffineMap operator+(const AffineMap& a, const AffineMap& b);
  friend AffineMap operator-(const AffineMap& a, const AffineMap& b);

 private:
  Matrix coeff_;
  Vector offset_;
};

/// Entry-wise finiteness check shared by the validating constructors.
bool all_finite(const Eigen::Ref<const Matrix>& m);

}  // namespace mpqp
