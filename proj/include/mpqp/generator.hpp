#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpqp/problem.hpp"

namespace mpqp {

enum class MpcKind { DoubleIntegrator, RandomStable };

/// "double_integrator" or "random_stable"; ValidationError otherwise.
MpcKind parse_mpc_kind(const std::string& name);
std::string to_string(MpcKind kind);

/// Linear system x+ = A x + B u with box bounds |u_i| <= u_max(i) and
/// |x_j| <= x_max(j) for every j in bounded_states, quadratic stage cost
/// x'Qx + u'Ru over stages 1..N (the last one doubling as terminal cost), and
/// parameter set Theta0 = {|theta_j| <= theta_max(j)}.
struct MpcSystem {
  Matrix A;
  Matrix B;
  Matrix Q;
  Matrix R;
  Vector u_max;
  std::vector<int> bounded_states;
  Vector x_max;
  Vector theta_max;
};

/// Condensed mpQP over the input sequence, parameterized by the initial state.
///
/// n = N n_u, p = n_x. Rows are the input bounds (stage by stage, upper then
/// lower for each input) followed by the state bounds for stages 1..N.
MpQP condense(const MpcSystem& sys, int horizon);

/// The system behind each generator kind. The double integrator has fixed
/// data and ignores the seed; random_stable draws sizes and matrices from it.
MpcSystem mpc_system(MpcKind kind, std::uint64_t seed);

/// Throws ValidationError when horizon < 1.
MpQP generate_mpc(MpcKind kind, int horizon, std::uint64_t seed);

}  // namespace mpqp
