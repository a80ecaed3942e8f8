#include "mpqp/regions.hpp"

#include <algorithm>
#include <cmath>

#include "mpqp/errors.hpp"

namespace mpqp {

namespace {

constexpr double kSnapTol = 1e-11;

// Zeroes entries of [coeff | offset] that are small relative to the
// magnitude of the terms they were computed from (given row-wise in
// `scale_coeff` / `scale_offset`).
AffineMap snap(const AffineMap& map, const Matrix& scale_coeff,
               const Vector& scale_offset) {
  Matrix coeff = map.coeff();
  Vector offset = map.offset();
  for (Eigen::Index i = 0; i < map.rows(); ++i) {
    double s = scale_offset(i);
    if (coeff.cols() > 0) s = std::max(s, scale_coeff.row(i).maxCoeff());
    const double cut = kSnapTol * s;
    for (Eigen::Index k = 0; k < coeff.cols(); ++k) {
      if (std::abs(coeff(i, k)) <= cut) coeff(i, k) = 0.0;
    }
    if (std::abs(offset(i)) <= cut) offset(i) = 0.0;
  }
  return AffineMap(std::move(coeff), std::move(offset));
}

}  // namespace

Matrix active_rows(const MpLDP& ldp, const ActiveSet& a) {
  Matrix out(static_cast<Eigen::Index>(a.size()), ldp.n());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int i = a.indices()[k];
    if (i >= ldp.m()) throw DimensionMismatch("active index exceeds m");
    out.row(static_cast<Eigen::Index>(k)) = ldp.M().row(i);
  }
  return out;
}

bool licq(const MpLDP& ldp, const ActiveSet& a, double rank_tol) {
  if (a.empty()) return true;
  if (static_cast<int>(a.size()) > ldp.n()) return false;
  const Matrix MA = active_rows(ldp, a);
  const double largest = MA.rowwise().norm().maxCoeff();
  if (!(largest > 0.0)) return false;
  Eigen::ColPivHouseholderQR<Matrix> qr(MA.transpose());
  const auto& R = qr.matrixR();
  const double cut = rank_tol * largest;
  for (Eigen::Index k = 0; k < MA.rows(); ++k) {
    if (!(std::abs(R(k, k)) > cut)) return false;
  }
  return true;
}

AffineMap dual_map(const MpLDP& ldp, const ActiveSet& a) {
  const Eigen::Index p = ldp.p();
  if (a.empty()) return AffineMap::zero(0, p);
  const Matrix MA = active_rows(ldp, a);
  const AffineMap dA = ldp.d().select_rows(a.indices());
  const Matrix gram = MA * MA.transpose();
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success ||
      !(llt.matrixLLT().diagonal().array() > 0.0).all()) {
    throw GramSingular("Gram matrix of " + a.to_string() +
                       " is not positive definite");
  }
  return AffineMap(-llt.solve(dA.coeff()), -llt.solve(dA.offset()));
}

AffineMap primal_map(const MpLDP& ldp, const ActiveSet& a,
                     const AffineMap& lambda) {
  if (lambda.rows() != static_cast<Eigen::Index>(a.size())) {
    throw DimensionMismatch("multiplier map does not match active set size");
  }
  if (a.empty()) return AffineMap::zero(ldp.n(), ldp.p());
  return (-lambda).left_multiply(active_rows(ldp, a).transpose());
}

AffineMap slack_map(const MpLDP& ldp, const ActiveSet& a, const AffineMap& u) {
  const std::vector<int> inactive = a.complement(ldp.m());
  const AffineMap dI = ldp.d().select_rows(inactive);
  if (inactive.empty()) return dI;
  Matrix MI(static_cast<Eigen::Index>(inactive.size()), ldp.n());
  for (std::size_t k = 0; k < inactive.size(); ++k) {
    MI.row(static_cast<Eigen::Index>(k)) = ldp.M().row(inactive[k]);
  }
  return dI - u.left_multiply(MI);
}

CriticalRegionRecord build_region(const MpLDP& ldp, const ActiveSet& a) {
  const Eigen::Index p = ldp.p();
  const std::vector<int> inactive = a.complement(ldp.m());

  AffineMap lambda = dual_map(ldp, a);
  AffineMap u = primal_map(ldp, a, lambda);
  AffineMap mu = slack_map(ldp, a, u);

  if (!a.empty()) {
    // |lambda| <= |Gram^{-1}| |d_A| entry-wise
    const Matrix MA = active_rows(ldp, a);
    const AffineMap dA = ldp.d().select_rows(a.indices());
    const Matrix gram_inv =
        (MA * MA.transpose()).llt().solve(Matrix::Identity(MA.rows(), MA.rows()));
    const Matrix abs_inv = gram_inv.cwiseAbs();
    lambda = snap(lambda, abs_inv * dA.coeff().cwiseAbs(),
                  abs_inv * dA.offset().cwiseAbs());
    u = primal_map(ldp, a, lambda);
    mu = slack_map(ldp, a, u);

    if (!inactive.empty()) {
      Matrix MI(static_cast<Eigen::Index>(inactive.size()), ldp.n());
      for (std::size_t k = 0; k < inactive.size(); ++k) {
        MI.row(static_cast<Eigen::Index>(k)) = ldp.M().row(inactive[k]);
      }
      const AffineMap dI = ldp.d().select_rows(inactive);
      // |mu| <= |d_I| + |M_I| |M_A'| |lambda|
      const Matrix chain = MI.cwiseAbs() * MA.transpose().cwiseAbs();
      mu = snap(mu,
                dI.coeff().cwiseAbs() + chain * lambda.coeff().cwiseAbs(),
                dI.offset().cwiseAbs() + chain * lambda.offset().cwiseAbs());
    }
  }

  const Polyhedron& theta0 = ldp.theta0();
  const Eigen::Index rows = mu.rows() + lambda.rows() + theta0.rows();
  Matrix G(rows, p);
  Vector g(rows);
  G << -mu.coeff(), -lambda.coeff(), theta0.G();
  g << mu.offset(), lambda.offset(), theta0.g();

  CriticalRegionRecord record;
  record.active_set = a;
  record.region = Polyhedron(std::move(G), std::move(g));
  record.lambda_map = std::move(lambda);
  record.u_map = std::move(u);
  record.x_map = AffineMap::zero(0, p);
  return record;
}

}  // namespace mpqp
