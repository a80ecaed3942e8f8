#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "mpqp/errors.hpp"
#include "mpqp/feasibility.hpp"

using namespace mpqp;

namespace {

Polyhedron unit_box2() {
  return Polyhedron::box(Vector::Constant(2, -1.0), Vector::Constant(2, 1.0));
}

// Rows shifted outward (delta > 0) or inward (delta < 0) by delta along
// their unit normals.
Polyhedron shifted(const Polyhedron& P, double delta) {
  return Polyhedron(P.G(), P.g() + delta * P.G().rowwise().norm());
}

Polyhedron random_polygon(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int k = 1 + static_cast<int>(rng() % 4);
  Matrix G(k + 4, 2);
  Vector g(k + 4);
  for (int i = 0; i < k; ++i) {
    G(i, 0) = u(rng);
    G(i, 1) = u(rng);
    g(i) = 1.5 * u(rng);
  }
  G.bottomRows(4) << 1, 0, -1, 0, 0, 1, 0, -1;
  g.tail(4).setConstant(10.0);
  return Polyhedron(G, g);
}

}  // namespace

TEST_CASE("unit box has the origin as minimum-norm witness") {
  const FeasibilityResult r = check_nonempty(unit_box2());
  REQUIRE(r.nonempty());
  CHECK(r.witness->norm() <= 1e-9);
  CHECK(r.max_violation <= 1e-8);
}

TEST_CASE("contradictory interval is empty with a Farkas certificate") {
  const Polyhedron P(Matrix{{1.0}, {-1.0}}, Vector{{-1.0, -1.0}});
  const FeasibilityResult r = check_nonempty(P);
  CHECK_FALSE(r.nonempty());
  CHECK_FALSE(r.witness.has_value());
  REQUIRE(r.certificate.has_value());
  const Vector& y = *r.certificate;
  CHECK(y.minCoeff() >= 0.0);
  CHECK((P.G().transpose() * y).norm() <= 1e-9 * y.norm());
  CHECK(y.dot(P.g()) < 0.0);
}

TEST_CASE("segment in the plane is nonempty and thin") {
  const Polyhedron P(Matrix{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}},
                     Vector{{0.5, -0.5, 1.0, 1.0}});
  const FeasibilityResult r = check_nonempty(P, FeasibilityOptions{1e-8, true});
  REQUIRE(r.nonempty());
  CHECK((*r.witness - Vector{{0.5, 0.0}}).norm() <= 1e-8);
  CHECK(r.lower_dimensional);
  CHECK_FALSE(check_nonempty(unit_box2(), FeasibilityOptions{1e-8, true}).lower_dimensional);
}

TEST_CASE("a single point is nonempty") {
  const Polyhedron P(Matrix{{1.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}, Vector{{0.0, 0.0, 0.0}});
  const FeasibilityResult r = check_nonempty(P, FeasibilityOptions{1e-8, true});
  CHECK(r.nonempty());
  CHECK(r.lower_dimensional);
}

TEST_CASE("trivially empty and rowless polyhedra") {
  const Polyhedron empty(Matrix{{0.0}}, Vector{{-1.0}});
  const FeasibilityResult r = check_nonempty(empty);
  CHECK_FALSE(r.nonempty());
  REQUIRE(r.certificate.has_value());
  CHECK(check_nonempty(Polyhedron::universe(3)).nonempty());
}

TEST_CASE("tolerance must be positive") {
  CHECK_THROWS_AS(check_nonempty(unit_box2(), 0.0), ValidationError);
  CHECK_THROWS_AS(check_nonempty(unit_box2(), -1.0), ValidationError);
}

TEST_CASE("agreement with vertex enumeration on random polygons") {
  std::mt19937_64 rng(123);
  int decided = 0, nonempty = 0, empty = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Polyhedron P = random_polygon(rng);
    const bool has_ball = testing::vertex_nonempty(shifted(P, -1e-6), 1e-12);
    const bool surely_empty = !testing::vertex_nonempty(shifted(P, 1e-6), 1e-12);
    if (!has_ball && !surely_empty) continue;
    ++decided;
    const FeasibilityResult r = check_nonempty(P);
    CHECK(r.nonempty() == has_ball);
    if (r.nonempty()) {
      ++nonempty;
      CHECK(P.contains(*r.witness, 1e-8 * (1.0 + P.G().cwiseAbs().maxCoeff())));
      CHECK(P.max_normalized_violation(*r.witness) <= 1e-8);
    } else {
      ++empty;
    }
    // A grid point inside P implies the vertex oracle saw it nonempty.
    bool grid_hit = false;
    for (int i = 0; i <= 40 && !grid_hit; ++i) {
      for (int j = 0; j <= 40 && !grid_hit; ++j) {
        grid_hit = P.contains(Vector{{-10.0 + 0.5 * i, -10.0 + 0.5 * j}}, 0.0);
      }
    }
    if (grid_hit) CHECK(has_ball);
  }
  CHECK(decided > 1900);
  CHECK(nonempty > 200);
  CHECK(empty > 200);
}

TEST_CASE("decision is invariant under positive row scaling") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> logscale(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Polyhedron P = random_polygon(rng);
    Vector s(P.rows());
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::pow(10.0, logscale(rng));
    const Polyhedron Q(s.asDiagonal() * P.G(), s.asDiagonal() * P.g());
    CHECK(check_nonempty(P).nonempty() == check_nonempty(Q).nonempty());
  }
}

TEST_CASE("corpus regions: every reported witness is valid") {
  for (const auto& c : testing::corpus()) {
    const FeasibilityResult r = check_nonempty(c.qp.theta0());
    REQUIRE(r.nonempty());
    CHECK(c.qp.theta0().max_normalized_violation(*r.witness) <= 1e-8);
  }
}

TEST_CASE("conservative decision never drops a region") {
  const NonemptyDecision d = decide_nonempty(unit_box2(), FeasibilityOptions{});
  CHECK(d.nonempty);
  CHECK_FALSE(d.inconclusive);
  const Polyhedron empty(Matrix{{1.0}, {-1.0}}, Vector{{-1.0, -1.0}});
  CHECK_FALSE(decide_nonempty(empty, FeasibilityOptions{}).nonempty);
}

TEST_CASE("projection") {
  const Polyhedron box = unit_box2();
  CHECK((project(box, Vector{{0.25, -0.5}}) - Vector{{0.25, -0.5}}).norm() <= 1e-9);
  CHECK((project(box, Vector{{3.0, 0.5}}) - Vector{{1.0, 0.5}}).norm() <= 1e-8);
  const Polyhedron empty(Matrix{{1.0}, {-1.0}}, Vector{{-1.0, -1.0}});
  CHECK_THROWS_AS(project(empty, Vector{{0.0}}), InfeasibleProblem);
}

TEST_CASE("bounding box") {
  const Polyhedron tri(Matrix{{-1.0, 0.0}, {0.0, -1.0}, {1.0, 1.0}}, Vector{{0.0, 0.0, 2.0}});
  const BoundingBox b = bounding_box(tri);
  CHECK(b.lower(0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(b.upper(0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(b.upper(1) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(b.lower(0) <= 0.0);
  CHECK(b.upper(0) >= 2.0);

  const Polyhedron half(Matrix{{1.0, 0.0}}, Vector{{1.0}});
  CHECK_THROWS_AS(bounding_box(half), Unbounded);
  const Polyhedron empty(Matrix{{1.0}, {-1.0}}, Vector{{-1.0, -1.0}});
  CHECK_THROWS_AS(bounding_box(empty), InfeasibleProblem);
}

TEST_CASE("nonnegative least squares") {
  const Vector x = nnls(Matrix::Identity(2, 2), Vector{{1.0, -1.0}});
  CHECK((x - Vector{{1.0, 0.0}}).norm() <= 1e-12);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix E(6, 4);
    Vector f(6);
    for (Eigen::Index i = 0; i < E.size(); ++i) E.data()[i] = u(rng);
    for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = u(rng);
    const Vector y = nnls(E, f);
    CHECK(y.minCoeff() >= 0.0);
    // Optimality: gradient w = E'(f - Ey) is <= 0, and zero on the support.
    const Vector w = E.transpose() * (f - E * y);
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      if (y(i) > 0) CHECK(std::abs(w(i)) <= 1e-9);
      else CHECK(w(i) <= 1e-9);
    }
  }
}
