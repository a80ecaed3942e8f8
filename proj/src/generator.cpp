#include "mpqp/generator.hpp"

#include <random>

#include <Eigen/Eigenvalues>

#include "mpqp/errors.hpp"

namespace mpqp {

MpcKind parse_mpc_kind(const std::string& name) {
  if (name == "double_integrator") return MpcKind::DoubleIntegrator;
  if (name == "random_stable") return MpcKind::RandomStable;
  throw ValidationError("kind: unknown generator '" + name +
                        "' (expected double_integrator or random_stable)");
}

std::string to_string(MpcKind kind) {
  return kind == MpcKind::DoubleIntegrator ? "double_integrator" : "random_stable";
}

MpQP condense(const MpcSystem& sys, int horizon) {
  if (horizon < 1) throw ValidationError("horizon: must be at least 1");
  const Eigen::Index nx = sys.A.rows();
  const Eigen::Index nu = sys.B.cols();
  const Eigen::Index N = horizon;

  // x_k = Phi_k theta + Gamma_k U for k = 1..N, stacked.
  Matrix Phi(N * nx, nx);
  Matrix Gamma = Matrix::Zero(N * nx, N * nu);
  Matrix Ak = Matrix::Identity(nx, nx);
  for (Eigen::Index k = 0; k < N; ++k) {
    for (Eigen::Index j = 0; j <= k; ++j) {
      // A^(k-j) B; reuse the block one stage up for j < k.
      if (j < k) {
        Gamma.block(k * nx, j * nu, nx, nu) = sys.A * Gamma.block((k - 1) * nx, j * nu, nx, nu);
      } else {
        Gamma.block(k * nx, j * nu, nx, nu) = sys.B;
      }
    }
    Ak = sys.A * Ak;
    Phi.block(k * nx, 0, nx, nx) = Ak;
  }

  Matrix Qbar = Matrix::Zero(N * nx, N * nx);
  Matrix Rbar = Matrix::Zero(N * nu, N * nu);
  for (Eigen::Index k = 0; k < N; ++k) {
    Qbar.block(k * nx, k * nx, nx, nx) = sys.Q;
    Rbar.block(k * nu, k * nu, nu, nu) = sys.R;
  }
  Matrix H = Gamma.transpose() * Qbar * Gamma + Rbar;
  H = 0.5 * (H + H.transpose()).eval();
  const Matrix f_coeff = Gamma.transpose() * Qbar * Phi;

  const auto nb = static_cast<Eigen::Index>(sys.bounded_states.size());
  const Eigen::Index m = 2 * N * nu + 2 * N * nb;
  Matrix A = Matrix::Zero(m, N * nu);
  Matrix b_coeff = Matrix::Zero(m, nx);
  Vector b_offset(m);
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < N; ++k) {
    for (Eigen::Index i = 0; i < nu; ++i) {
      A(r, k * nu + i) = 1.0;
      b_offset(r++) = sys.u_max(i);
      A(r, k * nu + i) = -1.0;
      b_offset(r++) = sys.u_max(i);
    }
  }
  for (Eigen::Index k = 0; k < N; ++k) {
    for (Eigen::Index s = 0; s < nb; ++s) {
      const Eigen::Index row = k * nx + sys.bounded_states[static_cast<std::size_t>(s)];
      A.row(r) = Gamma.row(row);
      b_coeff.row(r) = -Phi.row(row);
      b_offset(r++) = sys.x_max(s);
      A.row(r) = -Gamma.row(row);
      b_coeff.row(r) = Phi.row(row);
      b_offset(r++) = sys.x_max(s);
    }
  }

  return MpQP(std::move(H), AffineMap(f_coeff, Vector::Zero(N * nu)), std::move(A),
              AffineMap(std::move(b_coeff), std::move(b_offset)),
              Polyhedron::box(-sys.theta_max, sys.theta_max));
}

MpcSystem mpc_system(MpcKind kind, std::uint64_t seed) {
  MpcSystem sys;
  if (kind == MpcKind::DoubleIntegrator) {
    sys.A = Matrix{{1.0, 1.0}, {0.0, 1.0}};
    sys.B = Matrix{{0.5}, {1.0}};
    sys.Q = Matrix::Identity(2, 2);
    sys.R = Matrix::Constant(1, 1, 0.1);
    sys.u_max = Vector::Constant(1, 1.0);
    sys.bounded_states = {0};
    sys.x_max = Vector::Constant(1, 5.0);
    sys.theta_max = Vector{{5.0, 2.0}};
    return sys;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Eigen::Index nx = 2 + static_cast<Eigen::Index>(rng() % 2);
  const Eigen::Index nu = 1 + static_cast<Eigen::Index>(rng() % 2);
  sys.A = Matrix(nx, nx);
  sys.B = Matrix(nx, nu);
  for (Eigen::Index i = 0; i < nx; ++i) {
    for (Eigen::Index j = 0; j < nx; ++j) sys.A(i, j) = unit(rng);
    for (Eigen::Index j = 0; j < nu; ++j) sys.B(i, j) = unit(rng);
  }
  const double radius = sys.A.eigenvalues().cwiseAbs().maxCoeff();
  const double target = 0.6 + 0.3 * (0.5 * (unit(rng) + 1.0));
  if (radius > 0.0) sys.A *= target / radius;
  sys.Q = Matrix::Identity(nx, nx);
  sys.R = 0.1 * Matrix::Identity(nu, nu);
  sys.u_max = Vector::Constant(nu, 1.0);
  for (int j = 0; j < nx; ++j) sys.bounded_states.push_back(j);
  sys.x_max = Vector::Constant(nx, 3.0);
  sys.theta_max = Vector::Constant(nx, 2.0);
  return sys;
}

MpQP generate_mpc(MpcKind kind, int horizon, std::uint64_t seed) {
  if (horizon < 1) throw ValidationError("horizon: must be at least 1");
  return condense(mpc_system(kind, seed), horizon);
}

}  // namespace mpqp
