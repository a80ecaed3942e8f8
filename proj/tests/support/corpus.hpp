#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpqp/polyhedron.hpp"
#include "mpqp/problem.hpp"

namespace mpqp::testing {

struct CorpusProblem {
  std::string name;
  MpQP qp;
  /// n+1 constraints meet at one point for every theta.
  bool degenerate = false;
};

/// x <= 0, -x <= 1, cost 1/2 x^2 - theta x, theta in [-0.5, 2].
MpQP one_d_example();

/// Constraints that never bind inside Theta0.
MpQP never_active_example();

/// Random strictly convex problem; b offsets positive so theta = 0 is feasible.
MpQP random_problem(int n, int m, int p, std::uint64_t seed);

/// n+1 rows meeting at a single point x(theta) for every theta, plus `extra`
/// loose rows. d(0) = 0 on the degenerate rows, so lower-dimensional critical
/// regions appear at theta = 0.
MpQP degenerate_problem(int n, int extra, int p, std::uint64_t seed);

/// Seeded corpus: random problems over n in 1..4, m in 2..14, p in 1..3,
/// degenerate problems, and condensed MPC problems.
std::vector<CorpusProblem> corpus();

/// Minimizer of 1/2 x'Hx + c'x s.t. Ax <= b by enumerating linearly
/// independent active subsets of size <= n and solving each KKT system.
/// nullopt when no subset yields a KKT point (infeasible problem).
std::optional<Vector> kkt_enumeration_qp(const Matrix& H, const Vector& c,
                                         const Matrix& A, const Vector& b,
                                         double tol = 1e-9);

/// The mpQP at a fixed theta through kkt_enumeration_qp.
std::optional<Vector> reference_solution(const MpQP& qp, const Vector& theta);

/// Emptiness of a bounded polyhedron by vertex enumeration: nonempty iff some
/// intersection of dim() independent rows satisfies all rows within tol.
bool vertex_nonempty(const Polyhedron& P, double tol);

/// Uniform sample from the axis box [lower, upper].
Vector sample_box(std::mt19937_64& rng, const Vector& lower, const Vector& upper);

}  // namespace mpqp::testing
