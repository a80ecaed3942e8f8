#include "mpqp/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mpqp/errors.hpp"

namespace mpqp {

namespace {

struct NormalizedRows {
  Matrix G;
  Vector g;
  Vector scale;  // original row norms
};

NormalizedRows normalize(const Polyhedron& P) {
  NormalizedRows out{P.G(), P.g(), Vector(P.rows())};
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    const double nrm = P.G().row(i).norm();
    out.scale(i) = nrm;
    if (nrm > 0.0) {
      out.G.row(i) /= nrm;
      out.g(i) /= nrm;
    }
  }
  return out;
}

struct LdpOutcome {
  bool feasible = false;
  Vector point;
  Vector multipliers;
};

// min |x| subject to G x <= h, via the Lawson-Hanson reduction to NNLS on
// E = [-G'; -h'], f = e_{p+1}.
LdpOutcome least_distance(const Matrix& G, const Vector& h) {
  const Eigen::Index p = G.cols();
  const Eigen::Index q = G.rows();
  LdpOutcome out;
  if (q == 0) {
    out.feasible = true;
    out.point = Vector::Zero(p);
    out.multipliers = Vector(0);
    return out;
  }
  Matrix E(p + 1, q);
  E.topRows(p) = -G.transpose();
  E.row(p) = -h.transpose();
  Vector f = Vector::Zero(p + 1);
  f(p) = 1.0;

  out.multipliers = nnls(E, f);
  const Vector r = E * out.multipliers - f;
  const double rr = r.squaredNorm();
  if (rr > std::numeric_limits<double>::min()) {
    out.point = r.head(p) / rr;
    out.feasible = out.point.allFinite();
  }
  return out;
}

}  // namespace

Vector nnls(const Matrix& E, const Vector& f) {
  const Eigen::Index n = E.cols();
  const Eigen::Index rows = E.rows();
  Vector x = Vector::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  std::vector<bool> excluded(static_cast<std::size_t>(n), false);

  const double norm1 = n > 0 ? E.cwiseAbs().colwise().sum().maxCoeff() : 0.0;
  const double tol = 10.0 * std::numeric_limits<double>::epsilon() * norm1 *
                     static_cast<double>(std::max(rows, n));
  const int max_iter = 10 * static_cast<int>(n + rows) + 100;
  int iter = 0;

  Vector w = E.transpose() * (f - E * x);
  while (true) {
    Eigen::Index t = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (!passive[uj] && !excluded[uj] && w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) break;
    passive[static_cast<std::size_t>(t)] = true;

    bool first_solve = true;
    while (true) {
      if (++iter > max_iter) {
        throw IterationLimit("nonnegative least squares did not settle");
      }
      std::vector<Eigen::Index> P;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)]) P.push_back(j);
      }
      Matrix EP(rows, static_cast<Eigen::Index>(P.size()));
      for (std::size_t k = 0; k < P.size(); ++k) {
        EP.col(static_cast<Eigen::Index>(k)) = E.col(P[k]);
      }
      const Vector zP = EP.colPivHouseholderQr().solve(f);

      // Roundoff can make the entering column come out nonpositive; undo the
      // entry and try the next candidate instead of cycling on it.
      if (first_solve) {
        first_solve = false;
        const auto pos = std::find(P.begin(), P.end(), t) - P.begin();
        if (!(zP(pos) > 0.0)) {
          passive[static_cast<std::size_t>(t)] = false;
          excluded[static_cast<std::size_t>(t)] = true;
          break;
        }
      }

      if ((zP.array() > 0.0).all()) {
        x.setZero();
        for (std::size_t k = 0; k < P.size(); ++k) {
          x(P[k]) = zP(static_cast<Eigen::Index>(k));
        }
        std::fill(excluded.begin(), excluded.end(), false);
        break;
      }

      double alpha = std::numeric_limits<double>::infinity();
      Eigen::Index blocking = -1;
      for (std::size_t k = 0; k < P.size(); ++k) {
        const double zk = zP(static_cast<Eigen::Index>(k));
        if (zk <= 0.0) {
          const double xk = x(P[k]);
          const double a = xk / (xk - zk);
          if (a < alpha) {
            alpha = a;
            blocking = P[k];
          }
        }
      }
      for (std::size_t k = 0; k < P.size(); ++k) {
        const Eigen::Index j = P[k];
        x(j) += alpha * (zP(static_cast<Eigen::Index>(k)) - x(j));
      }
      x(blocking) = 0.0;
      for (Eigen::Index j : P) {
        if (x(j) <= tol) {
          x(j) = 0.0;
          passive[static_cast<std::size_t>(j)] = false;
        }
      }
      std::fill(excluded.begin(), excluded.end(), false);
    }
    w = E.transpose() * (f - E * x);
  }
  return x;
}

FeasibilityResult check_nonempty(const Polyhedron& P,
                                 const FeasibilityOptions& options) {
  if (!(options.eps_feas > 0.0)) {
    throw ValidationError("eps_feas must be positive");
  }
  FeasibilityResult result;
  const Eigen::Index q = P.rows();

  if (P.trivially_empty()) {
    Vector y = Vector::Zero(q);
    for (Eigen::Index i = 0; i < q; ++i) {
      if (P.G().row(i).isZero(0.0) && P.g()(i) < 0.0) {
        y(i) = 1.0;
        break;
      }
    }
    result.status = FeasibilityStatus::Empty;
    result.certificate = std::move(y);
    return result;
  }

  const NormalizedRows rows = normalize(P);
  const double relax = 0.5 * options.eps_feas;
  const LdpOutcome ldp =
      least_distance(rows.G, (rows.g.array() + relax).matrix());

  if (ldp.feasible) {
    const double viol =
        q > 0 ? (rows.G * ldp.point - rows.g).maxCoeff() : -1.0;
    if (viol <= options.eps_feas) {
      result.status = FeasibilityStatus::NonEmpty;
      result.witness = ldp.point;
      result.max_violation = viol;
      if (options.classify_dimension) {
        // A set with at most one row near-tight at a feasible point holds a
        // ball of radius kThinMargin next to it; skip the second solve then.
        const Vector slack = rows.g - rows.G * ldp.point;
        const auto tight =
            (slack.array() < 2.0 * kThinMargin + options.eps_feas).count();
        if (tight >= 2) {
          const LdpOutcome inner =
              least_distance(rows.G, (rows.g.array() - kThinMargin).matrix());
          const bool inner_ok =
              inner.feasible &&
              (rows.G * inner.point - rows.g).maxCoeff() <= -kThinMargin + relax;
          result.lower_dimensional = !inner_ok;
        }
      }
      return result;
    }
  }

  // No witness: the NNLS solution must certify infeasibility of the relaxed
  // set, y >= 0, y'G = 0, y'(g + relax) < 0, which implies the same for P.
  const Vector& y = ldp.multipliers;
  const double gap = -(rows.g.array() + relax).matrix().dot(y);
  const double residual = (rows.G.transpose() * y).norm();
  if (!(gap > 0.0) || residual > 1e-6 * gap) {
    throw IterationLimit("feasibility check inconclusive (no witness, weak certificate)");
  }
  Vector cert(q);
  for (Eigen::Index i = 0; i < q; ++i) {
    cert(i) = rows.scale(i) > 0.0 ? y(i) / rows.scale(i) : 0.0;
  }
  result.status = FeasibilityStatus::Empty;
  result.certificate = std::move(cert);
  return result;
}

FeasibilityResult check_nonempty(const Polyhedron& P, double eps_feas) {
  return check_nonempty(P, FeasibilityOptions{eps_feas, false});
}

NonemptyDecision decide_nonempty(const Polyhedron& P,
                                 const FeasibilityOptions& options) {
  NonemptyDecision decision;
  try {
    const FeasibilityResult r = check_nonempty(P, options);
    decision.nonempty = r.nonempty();
    decision.lower_dimensional = r.lower_dimensional;
  } catch (const IterationLimit&) {
    decision.nonempty = true;
    decision.inconclusive = true;
  }
  return decision;
}

Vector project(const Polyhedron& P, const Vector& point, double eps_feas) {
  if (point.size() != P.dim()) {
    throw DimensionMismatch("projected point does not match polyhedron");
  }
  // Shift so the target is the origin, then take the minimum-norm point.
  Polyhedron shifted(P.G(), P.g() - P.G() * point);
  const FeasibilityResult r = check_nonempty(shifted, eps_feas);
  if (!r.nonempty()) throw InfeasibleProblem("projection onto an empty set");
  return point + *r.witness;
}

BoundingBox bounding_box(const Polyhedron& P, double eps_feas) {
  const FeasibilityResult base = check_nonempty(P, eps_feas);
  if (!base.nonempty()) {
    throw InfeasibleProblem("bounding box of an empty polyhedron");
  }
  const Eigen::Index p = P.dim();
  constexpr double kLimit = 1e12;
  BoundingBox box{Vector(p), Vector(p)};

  for (Eigen::Index i = 0; i < p; ++i) {
    for (double sign : {1.0, -1.0}) {
      // Is there a point with sign * theta_i >= level?
      auto reaches = [&](double level) {
        Matrix row = Matrix::Zero(1, p);
        row(0, i) = -sign;
        const Polyhedron cut = P.intersect(Polyhedron(row, Vector::Constant(1, -level)));
        return decide_nonempty(cut, FeasibilityOptions{eps_feas, false}).nonempty;
      };
      double inside = sign * (*base.witness)(i);
      double step = 1.0;
      double outside = inside + step;
      while (reaches(outside)) {
        inside = outside;
        step *= 2.0;
        outside = inside + step;
        if (std::abs(outside) > kLimit) {
          throw Unbounded("polyhedron is unbounded along coordinate " +
                          std::to_string(i + 1));
        }
      }
      for (int it = 0; it < 200; ++it) {
        if (outside - inside <= 1e-12 * (1.0 + std::abs(inside))) break;
        const double mid = 0.5 * (inside + outside);
        (reaches(mid) ? inside : outside) = mid;
      }
      if (sign > 0) {
        box.upper(i) = outside;
      } else {
        box.lower(i) = -outside;
      }
    }
  }
  return box;
}

}  // namespace mpqp
