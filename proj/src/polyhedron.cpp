#include "mpqp/polyhedron.hpp"

#include <limits>
#include <sstream>

#include "mpqp/errors.hpp"

namespace mpqp {

Polyhedron::Polyhedron(Matrix G, Vector g) {
  if (G.rows() != g.size()) {
    std::ostringstream os;
    os << "polyhedron has " << G.rows() << " normal rows but " << g.size()
       << " offsets";
    throw DimensionMismatch(os.str());
  }
  if (!all_finite(G) || !all_finite(g)) {
    throw ValidationError("polyhedron has non-finite entries");
  }

  std::vector<Eigen::Index> keep;
  keep.reserve(static_cast<std::size_t>(g.size()));
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    const bool zero_normal = G.cols() == 0 || (G.row(i).array() == 0.0).all();
    if (!zero_normal) {
      keep.push_back(i);
    } else if (g(i) < 0.0) {
      trivially_empty_ = true;
      keep.push_back(i);
    }
  }
  if (keep.size() == static_cast<std::size_t>(G.rows())) {
    G_ = std::move(G);
    g_ = std::move(g);
    return;
  }
  G_.resize(static_cast<Eigen::Index>(keep.size()), G.cols());
  g_.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t r = 0; r < keep.size(); ++r) {
    G_.row(static_cast<Eigen::Index>(r)) = G.row(keep[r]);
    g_(static_cast<Eigen::Index>(r)) = g(keep[r]);
  }
}

Polyhedron Polyhedron::universe(Eigen::Index dim) {
  return Polyhedron(Matrix(0, dim), Vector(0));
}

Polyhedron Polyhedron::box(const Vector& lower, const Vector& upper) {
  if (lower.size() != upper.size()) {
    throw DimensionMismatch("box bounds differ in length");
  }
  const Eigen::Index p = lower.size();
  Matrix G(2 * p, p);
  G << Matrix::Identity(p, p), -Matrix::Identity(p, p);
  Vector g(2 * p);
  g << upper, -lower;
  return Polyhedron(std::move(G), std::move(g));
}

bool Polyhedron::contains(const Eigen::Ref<const Vector>& theta,
                          double tol) const {
  if (theta.size() != dim()) {
    throw DimensionMismatch("point dimension does not match polyhedron");
  }
  if (rows() == 0) return true;
  return ((G_ * theta - g_).array() <= tol).all();
}

double Polyhedron::max_normalized_violation(
    const Eigen::Ref<const Vector>& theta) const {
  if (theta.size() != dim()) {
    throw DimensionMismatch("point dimension does not match polyhedron");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < rows(); ++i) {
    const double nrm = G_.row(i).norm();
    const double r = G_.row(i).dot(theta) - g_(i);
    // Zero-normal rows survive construction only when they are violated.
    const double v =
        nrm > 0.0 ? r / nrm : std::numeric_limits<double>::infinity();
    worst = std::max(worst, v);
  }
  return worst;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.dim() != dim()) {
    throw DimensionMismatch("intersecting polyhedra of different dimension");
  }
  Matrix G(rows() + other.rows(), dim());
  G << G_, other.G_;
  Vector g(rows() + other.rows());
  g << g_, other.g_;
  return Polyhedron(std::move(G), std::move(g));
}

}  // namespace mpqp
