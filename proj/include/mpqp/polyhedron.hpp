#pragma once

#include "mpqp/affine_map.hpp"

namespace mpqp {

/// The set {theta : G theta <= g}.
///
/// Rows with an all-zero normal are resolved at construction: a nonnegative
/// offset makes the row vacuous and it is dropped; a negative offset marks the
/// polyhedron as trivially empty (the row is kept so the emptiness survives
/// serialization).
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(Matrix G, Vector g);

  /// The whole space R^p.
  static Polyhedron universe(Eigen::Index dim);
  /// Axis-aligned box lower <= theta <= upper.
  static Polyhedron box(const Vector& lower, const Vector& upper);

  const Matrix& G() const noexcept { return G_; }
  const Vector& g() const noexcept { return g_; }
  Eigen::Index dim() const noexcept { return G_.cols(); }
  Eigen::Index rows() const noexcept { return g_.size(); }
  bool trivially_empty() const noexcept { return trivially_empty_; }

  /// True iff G theta <= g + tol componentwise.
  bool contains(const Eigen::Ref<const Vector>& theta, double tol) const;

  /// Largest row violation after scaling each row to a unit normal; <= 0
  /// inside. Returns -inf for a polyhedron without rows.
  double max_normalized_violation(const Eigen::Ref<const Vector>& theta) const;

  /// Rows of `this` followed by rows of `other`.
  Polyhedron intersect(const Polyhedron& other) const;

 private:
  Matrix G_;
  Vector g_;
  bool trivially_empty_ = false;
};

}  // namespace mpqp
