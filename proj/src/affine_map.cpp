#include "mpqp/affine_map.hpp"

#include <sstream>

#include "mpqp/errors.hpp"

namespace mpqp {

bool all_finite(const Eigen::Ref<const Matrix>& m) {
  return m.size() == 0 || m.allFinite();
}

AffineMap::AffineMap(Matrix coeff, Vector offset)
    : coeff_(std::move(coeff)), offset_(std::move(offset)) {
  if (coeff_.rows() != offset_.size()) {
    std::ostringstream os;
    os << "affine map has " << coeff_.rows() << " coefficient rows but "
       << offset_.size() << " offset entries";
    throw DimensionMismatch(os.str());
  }
  if (!all_finite(coeff_) || !all_finite(offset_)) {
    throw ValidationError("affine map has non-finite entries");
  }
}

AffineMap AffineMap::constant(Vector offset, Eigen::Index params) {
  Matrix coeff = Matrix::Zero(offset.size(), params);
  return AffineMap(std::move(coeff), std::move(offset));
}

AffineMap AffineMap::zero(Eigen::Index rows, Eigen::Index params) {
  return AffineMap(Matrix::Zero(rows, params), Vector::Zero(rows));
}

Vector AffineMap::eval(const Eigen::Ref<const Vector>& theta) const {
  if (theta.size() != params()) {
    std::ostringstream os;
    os << "parameter has " << theta.size() << " entries, map expects "
       << params();
    throw DimensionMismatch(os.str());
  }
  return offset_ + coeff_ * theta;
}

AffineMap AffineMap::left_multiply(const Eigen::Ref<const Matrix>& k) const {
  if (k.cols() != rows()) {
    throw DimensionMismatch("left factor columns do not match map rows");
  }
  return AffineMap(k * coeff_, k * offset_);
}

AffineMap AffineMap::select_rows(const std::vector<int>& rows) const {
  Matrix c(static_cast<Eigen::Index>(rows.size()), params());
  Vector o(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    c.row(static_cast<Eigen::Index>(r)) = coeff_.row(rows[r]);
    o(static_cast<Eigen::Index>(r)) = offset_(rows[r]);
  }
  return AffineMap(std::move(c), std::move(o));
}

AffineMap AffineMap::operator-() const { return AffineMap(-coeff_, -offset_); }

AffineMap operator+(const AffineMap& a, const AffineMap& b) {
  if (a.rows() != b.rows() || a.params() != b.params()) {
    throw DimensionMismatch("adding affine maps of different shapes");
  }
  return AffineMap(a.coeff_ + b.coeff_, a.offset_ + b.offset_);
}

AffineMap operator-(const AffineMap& a, const AffineMap& b) { return a + (-b); }

}  // namespace mpqp
