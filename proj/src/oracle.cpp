#include "mpqp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mpqp/errors.hpp"
#include "mpqp/feasibility.hpp"
#include "mpqp/regions.hpp"

namespace mpqp {

namespace {

constexpr double kActiveTol = 1e-8;
constexpr double kEnterTol = 1e-12;
constexpr double kDependentTol = 1e-10;

}  // namespace

PointwiseSolution solve_least_distance(const Matrix& M, const Vector& d) {
  const Eigen::Index m = M.rows();
  const Eigen::Index n = M.cols();
  if (d.size() != m) throw DimensionMismatch("offset length does not match M");
  if (!d.allFinite()) throw ValidationError("non-finite constraint offset");

  PointwiseSolution sol;
  const Vector norms = M.rowwise().norm();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (norms(i) == 0.0 && d(i) < 0.0) return sol;  // 0 <= d_i fails
  }

  std::vector<int> work;       // working set, linearly independent rows
  std::vector<double> lambda;  // multipliers parallel to `work`
  Vector u = Vector::Zero(n);
  const int cap = 50 * static_cast<int>(m + n) + 100;
  int iter = 0;

  auto in_work = [&](Eigen::Index i) {
    return std::find(work.begin(), work.end(), static_cast<int>(i)) != work.end();
  };

  while (true) {
    Eigen::Index k = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (norms(i) == 0.0 || in_work(i)) continue;
      const double viol = (M.row(i).dot(u) - d(i)) / norms(i);
      if (viol > kEnterTol * (1.0 + std::abs(d(i)) / norms(i))) {
        k = i;
        break;
      }
    }
    if (k < 0) break;

    const Vector a = M.row(k).transpose();
    double t_k = 0.0;
    while (true) {
      if (++iter > cap) {
        throw IterationLimit("dual active-set solve exceeded " +
                             std::to_string(cap) + " iterations");
      }
      const auto w = static_cast<Eigen::Index>(work.size());
      Vector z = a;
      Vector r(w);
      if (w > 0) {
        Matrix NT(n, w);
        for (Eigen::Index j = 0; j < w; ++j) {
          NT.col(j) = M.row(work[static_cast<std::size_t>(j)]).transpose();
        }
        Eigen::HouseholderQR<Matrix> qr(NT);
        const Matrix Q1 = qr.householderQ() * Matrix::Identity(n, w);
        const Vector c1 = Q1.transpose() * a;
        z = a - Q1 * c1;
        r = qr.matrixQR().topLeftCorner(w, w).triangularView<Eigen::Upper>().solve(c1);
      }

      const double viol = a.dot(u) - d(k);
      const double inf = std::numeric_limits<double>::infinity();
      const double t_full =
          z.norm() > kDependentTol * a.norm() ? std::max(viol, 0.0) / a.dot(z) : inf;

      double t_part = inf;
      Eigen::Index block = -1;
      for (Eigen::Index j = 0; j < w; ++j) {
        if (r(j) <= 0.0) continue;
        const double ratio = lambda[static_cast<std::size_t>(j)] / r(j);
        if (ratio < t_part ||
            (ratio == t_part && work[static_cast<std::size_t>(j)] <
                                    work[static_cast<std::size_t>(block)])) {
          t_part = ratio;
          block = j;
        }
      }

      if (t_full == inf && block < 0) {
        sol.iterations = iter;
        return sol;  // Farkas: a = N' r with r <= 0
      }

      const double t = std::min(t_full, t_part);
      u -= t * z;
      for (Eigen::Index j = 0; j < w; ++j) {
        lambda[static_cast<std::size_t>(j)] -= t * r(j);
      }
      t_k += t;
      if (t_full <= t_part) {
        work.push_back(static_cast<int>(k));
        lambda.push_back(t_k);
        break;
      }
      work.erase(work.begin() + block);
      lambda.erase(lambda.begin() + block);
    }
  }

  sol.status = PointwiseStatus::Optimal;
  sol.iterations = iter;
  sol.lambda = Vector::Zero(m);
  for (std::size_t j = 0; j < work.size(); ++j) {
    sol.lambda(work[j]) = std::max(lambda[j], 0.0);
  }
  sol.u_star = -M.transpose() * sol.lambda;

  const Vector slack = d - M * sol.u_star;
  std::vector<int> active;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (norms(i) > 0.0 && std::abs(slack(i)) / norms(i) <= kActiveTol) {
      active.push_back(static_cast<int>(i));
    }
  }
  sol.active_set = ActiveSet(std::move(active));
  return sol;
}

PointwiseSolution pointwise_solve(const MpLDP& ldp, const Vector& theta) {
  if (!theta.allFinite()) throw ValidationError("non-finite parameter");
  return solve_least_distance(ldp.M(), ldp.d().eval(theta));
}

double KktResiduals::worst() const {
  return std::max({stationarity, primal, dual, complementarity});
}

KktResiduals kkt_residuals(const Matrix& M, const Vector& d, const Vector& u,
                           const Vector& lambda) {
  KktResiduals res;
  if (M.rows() == 0) {
    res.stationarity = u.size() ? u.cwiseAbs().maxCoeff() : 0.0;
    return res;
  }
  const Vector slack = d - M * u;
  res.stationarity = (u + M.transpose() * lambda).cwiseAbs().maxCoeff();
  res.primal = std::max(0.0, (-slack).maxCoeff());
  res.dual = std::max(0.0, (-lambda).maxCoeff());
  res.complementarity = slack.cwiseProduct(lambda).cwiseAbs().maxCoeff();
  return res;
}

namespace {

void enumerate(const MpLDP& ldp, const Tolerances& tol, int start,
               std::vector<int>& current, int max_size,
               std::vector<ActiveSet>& out) {
  const ActiveSet a(current);
  if (licq(ldp, a, tol.rank_tol)) {
    const CriticalRegionRecord rec = build_region(ldp, a);
    if (decide_nonempty(rec.region, FeasibilityOptions{tol.eps_feas, false}).nonempty) {
      out.push_back(a);
    }
  }
  if (static_cast<int>(current.size()) == max_size) return;
  for (int i = start; i < ldp.m(); ++i) {
    current.push_back(i);
    enumerate(ldp, tol, i + 1, current, max_size, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ActiveSet> brute_force(const MpLDP& ldp, const Tolerances& tol) {
  if (ldp.m() > 24) {
    throw TooLarge("exhaustive enumeration is limited to m <= 24, got " +
                   std::to_string(ldp.m()));
  }
  std::vector<ActiveSet> out;
  std::vector<int> current;
  enumerate(ldp, tol, 0, current, std::min(ldp.n(), ldp.m()), out);
  std::sort(out.begin(), out.end());
  return out;
}

bool kkt_solvable(const MpLDP& ldp, const ActiveSet& a, const Tolerances& tol) {
  const FeasibilityOptions opts{tol.eps_feas, false};
  if (licq(ldp, a, tol.rank_tol)) {
    return decide_nonempty(build_region(ldp, a).region, opts).nonempty;
  }
  const Eigen::Index p = ldp.p();
  const auto k = static_cast<Eigen::Index>(a.size());
  const std::vector<int> inactive = a.complement(ldp.m());
  const auto ni = static_cast<Eigen::Index>(inactive.size());
  const Matrix MA = active_rows(ldp, a);
  Matrix MI(ni, ldp.n());
  for (Eigen::Index j = 0; j < ni; ++j) {
    MI.row(j) = ldp.M().row(inactive[static_cast<std::size_t>(j)]);
  }
  const AffineMap dA = ldp.d().select_rows(a.indices());
  const AffineMap dI = ldp.d().select_rows(inactive);
  const Matrix gram = MA * MA.transpose();
  const Polyhedron& theta0 = ldp.theta0();

  const Eigen::Index rows = 2 * k + k + ni + theta0.rows();
  Matrix G = Matrix::Zero(rows, p + k);
  Vector g = Vector::Zero(rows);
  Eigen::Index r = 0;
  // -gram lambda - dA.coeff theta == dA.offset
  G.block(r, 0, k, p) = -dA.coeff();
  G.block(r, p, k, k) = -gram;
  g.segment(r, k) = dA.offset();
  r += k;
  G.block(r, 0, k, p) = dA.coeff();
  G.block(r, p, k, k) = gram;
  g.segment(r, k) = -dA.offset();
  r += k;
  G.block(r, p, k, k) = -Matrix::Identity(k, k);
  r += k;
  G.block(r, 0, ni, p) = -dI.coeff();
  G.block(r, p, ni, k) = -MI * MA.transpose();
  g.segment(r, ni) = dI.offset();
  r += ni;
  G.block(r, 0, theta0.rows(), p) = theta0.G();
  g.segment(r, theta0.rows()) = theta0.g();

  return decide_nonempty(Polyhedron(std::move(G), std::move(g)), opts).nonempty;
}

}  // namespace mpqp
