#include "mpqp/problem.hpp"

#include <sstream>

#include "mpqp/errors.hpp"
#include "mpqp/transform.hpp"

namespace mpqp {

namespace {

std::string shape_message(const char* field, Eigen::Index rows,
                          Eigen::Index cols, Eigen::Index want_rows,
                          Eigen::Index want_cols) {
  std::ostringstream os;
  os << field << ": shape " << rows << 'x' << cols << ", expected "
     << want_rows << 'x' << want_cols;
  return os.str();
}

void check_shape(const char* field, const Matrix& m, Eigen::Index rows,
                 Eigen::Index cols) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ValidationError(shape_message(field, m.rows(), m.cols(), rows, cols));
  }
}

void check_map(const char* field, const AffineMap& map, Eigen::Index rows,
               Eigen::Index params) {
  if (map.rows() != rows || map.params() != params) {
    throw ValidationError(
        shape_message(field, map.rows(), map.params(), rows, params));
  }
}

}  // namespace

MpQP::MpQP(Matrix H, AffineMap f, Matrix A, AffineMap b, Polyhedron theta0)
    : H_(std::move(H)),
      f_(std::move(f)),
      A_(std::move(A)),
      b_(std::move(b)),
      theta0_(std::move(theta0)) {
  const Eigen::Index n = H_.rows();
  const Eigen::Index m = A_.rows();
  const Eigen::Index p = theta0_.dim();
  if (n == 0) throw ValidationError("H: empty Hessian");
  check_shape("H", H_, n, n);
  check_shape("A", A_, m, n);
  check_map("f", f_, n, p);
  check_map("b", b_, m, p);
  if (!all_finite(H_)) throw ValidationError("H: non-finite entries");
  if (!all_finite(A_)) throw ValidationError("A: non-finite entries");

  const double asym = (H_ - H_.transpose()).cwiseAbs().maxCoeff();
  const double scale = H_.cwiseAbs().maxCoeff();
  if (asym > 1e-10 * (1.0 + scale)) {
    throw ValidationError("H: not symmetric");
  }
  H_ = 0.5 * (H_ + H_.transpose()).eval();
  if (!upper_cholesky(H_)) {
    throw ValidationError("H: not positive definite");
  }
}

MpLDP::MpLDP(Matrix M, AffineMap d, Polyhedron theta0)
    : M_(std::move(M)), d_(std::move(d)), theta0_(std::move(theta0)) {
  check_map("d", d_, M_.rows(), theta0_.dim());
  if (!all_finite(M_)) throw ValidationError("M: non-finite entries");
}

}  // namespace mpqp
