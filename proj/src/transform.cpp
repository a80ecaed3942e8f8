#include "mpqp/transform.hpp"

#include "mpqp/errors.hpp"

namespace mpqp {

std::optional<Matrix> upper_cholesky(const Matrix& H) {
  const Eigen::Index n = H.rows();
  if (n == 0 || H.cols() != n) return std::nullopt;
  const double floor = 1e-12 * H.trace() / static_cast<double>(n);
  if (!(floor > 0.0)) return std::nullopt;

  Eigen::LLT<Matrix> llt(H);
  if (llt.info() != Eigen::Success) return std::nullopt;
  Matrix L = llt.matrixL();
  // Pivots of the factorization are the squared diagonal entries of L.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!(L(k, k) * L(k, k) > floor)) return std::nullopt;
  }
  return Matrix(L.transpose());
}

std::pair<MpLDP, RecoveryData> to_ldp(const MpQP& qp) {
  auto R = upper_cholesky(qp.H());
  if (!R) throw CholeskyFailure("H is not positive definite");

  const auto Rt = R->transpose().triangularView<Eigen::Lower>();
  // M' = R^{-T} A'
  Matrix M = Rt.solve(qp.A().transpose()).transpose();
  // w(theta) = R^{-T} f(theta)
  AffineMap w(Rt.solve(qp.f().coeff()), Rt.solve(qp.f().offset()));
  AffineMap d = qp.b() + w.left_multiply(M);

  MpLDP ldp(std::move(M), std::move(d), qp.theta0());
  RecoveryData rec{std::move(*R), qp.f()};
  return {std::move(ldp), std::move(rec)};
}

AffineMap recover_solution(const RecoveryData& rec, const AffineMap& u_map) {
  const Eigen::Index n = rec.R.rows();
  if (u_map.rows() != n || u_map.params() != rec.f.params()) {
    throw DimensionMismatch("primal map shape does not match recovery data");
  }
  const auto Rt = rec.R.transpose().triangularView<Eigen::Lower>();
  const auto Ru = rec.R.triangularView<Eigen::Upper>();
  Matrix coeff = Ru.solve(u_map.coeff() - Rt.solve(rec.f.coeff()));
  Vector offset = Ru.solve(u_map.offset() - Rt.solve(rec.f.offset()));
  return AffineMap(std::move(coeff), std::move(offset));
}

Vector recover_point(const RecoveryData& rec, const Vector& u,
                     const Vector& theta) {
  if (u.size() != rec.R.rows()) {
    throw DimensionMismatch("primal point length does not match recovery data");
  }
  const auto Rt = rec.R.transpose().triangularView<Eigen::Lower>();
  const Vector w = Rt.solve(rec.f.eval(theta));
  return rec.R.triangularView<Eigen::Upper>().solve(u - w);
}

}  // namespace mpqp
