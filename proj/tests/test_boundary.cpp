#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldman/boundary.hpp"
#include "goldman/errors.hpp"
#include "testutil.hpp"

using namespace goldman;

namespace {
ProjectiveMatrix pm(long a, long b, long c, long d) {
  return ProjectiveMatrix{Int(a), Int(b), Int(c), Int(d)};
}
BoundaryPoint bp(long p, long q, long r, long D) { return BoundaryPoint{Int(p), Int(q), Int(r), Int(D)}; }
}  // namespace

TEST_CASE("boundary point normalization") {
  // Perfect squares fold into the rational part.
  BoundaryPoint a = bp(1, 3, 2, 9);  // (1 + 3*3)/2 = 5
  CHECK(a.is_rational());
  CHECK(boundary_eq(a, BoundaryPoint::rational(5, 1)));
  // Common factors cancel and the denominator is positive.
  BoundaryPoint b = bp(-2, -4, -6, 5);
  CHECK(b.r() > 0);
  CHECK(boundary_eq(b, bp(1, 2, 3, 5)));
}

TEST_CASE("boundary_less spec examples") {
  BoundaryPoint golden_pos = bp(-1, 1, 2, 5);   // (-1+sqrt5)/2 ~ 0.618
  BoundaryPoint golden_neg = bp(-1, -1, 2, 5);  // ~ -1.618
  BoundaryPoint two_minus = bp(2, -2, 1, 2);    // 2-2sqrt2 ~ -0.828
  CHECK_FALSE(boundary_less(golden_pos, golden_neg));
  CHECK(boundary_less(golden_neg, golden_pos));
  CHECK(boundary_less(two_minus, golden_pos));
  CHECK_FALSE(boundary_less(golden_pos, golden_pos));
}

TEST_CASE("boundary comparison agrees with doubles on random points") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> small(-30, 30);
  std::uniform_int_distribution<long> den(1, 20);
  std::uniform_int_distribution<long> rad(0, 30);
  for (int i = 0; i < 500; ++i) {
    BoundaryPoint a = bp(small(rng), small(rng), den(rng), rad(rng));
    BoundaryPoint b = bp(small(rng), small(rng), den(rng), rad(rng));
    double da = a.to_double(), db = b.to_double();
    if (std::abs(da - db) < 1e-9) continue;  // too close to trust doubles
    CHECK(boundary_less(a, b) == (da < db));
  }
}

TEST_CASE("fixed_points spec examples") {
  Axis a = fixed_points(pm(1, 1, 1, 2));
  CHECK(boundary_eq(a.attracting, bp(-1, 1, 2, 5)));
  CHECK(boundary_eq(a.repelling, bp(-1, -1, 2, 5)));
  Axis b = fixed_points(pm(3, 8, 1, 3));
  CHECK(boundary_eq(b.attracting, bp(0, 2, 1, 2)));   // 2 sqrt 2
  CHECK(boundary_eq(b.repelling, bp(0, -2, 1, 2)));
  CHECK_THROWS_AS(fixed_points(pm(1, 1, 0, 1)), DomainError);
}

TEST_CASE("fixed points satisfy the fixed-point quadratic exactly") {
  std::mt19937 rng(22);
  for (int i = 0; i < 100; ++i) {
    ProjectiveMatrix m = test::random_hyperbolic(rng, 10);
    Axis ax = fixed_points(m);
    CHECK(fixes_boundary_point(m, ax.attracting));
    CHECK(fixes_boundary_point(m, ax.repelling));
  }
}

TEST_CASE("conjugation equivariance of axes") {
  std::mt19937 rng(23);
  for (int i = 0; i < 50; ++i) {
    ProjectiveMatrix m = test::random_hyperbolic(rng, 8);
    ProjectiveMatrix g = test::random_element(rng, 8);
    Axis am = fixed_points(m);
    Axis ac = fixed_points(conjugate(g, m));
    CHECK(boundary_eq(ac.attracting, mobius_boundary(g, am.attracting)));
    CHECK(boundary_eq(ac.repelling, mobius_boundary(g, am.repelling)));
  }
}

TEST_CASE("crossing_sign spec example") {
  Axis ax = fixed_points(pm(1, 1, 1, 2));
  // T^2 [[3,8],[1,3]] T^-2 has endpoints 2 +- 2 sqrt 2.
  ProjectiveMatrix t2 = power(evaluate("T"), 2);
  Axis ay = fixed_points(conjugate(t2, pm(3, 8, 1, 3)));
  CHECK(boundary_eq(ay.attracting, bp(2, 2, 1, 2)));
  CHECK(boundary_eq(ay.repelling, bp(2, -2, 1, 2)));
  CHECK(crossing_sign(ax, ay) == 1);
  CHECK(crossing_sign(ay, ax) == -1);
  CHECK(crossing_sign(ax, ax) == 0);
}

TEST_CASE("crossing_sign antisymmetry and reversal") {
  std::mt19937 rng(24);
  int crossings = 0;
  for (int i = 0; i < 200 || crossings < 30; ++i) {
    Axis a = fixed_points(test::random_hyperbolic(rng, 8));
    Axis b = fixed_points(test::random_hyperbolic(rng, 8));
    int s = crossing_sign(a, b);
    CHECK(crossing_sign(b, a) == -s);
    CHECK(crossing_sign(a, b.reversed()) == -s);
    if (s != 0) ++crossings;
    if (i > 2000) break;
  }
  CHECK(crossings >= 30);
}

TEST_CASE("crossing_sign is conjugation invariant") {
  std::mt19937 rng(25);
  for (int i = 0; i < 50; ++i) {
    ProjectiveMatrix x = test::random_hyperbolic(rng, 8);
    ProjectiveMatrix y = test::random_hyperbolic(rng, 8);
    ProjectiveMatrix g = test::random_element(rng, 8);
    int s = crossing_sign(fixed_points(x), fixed_points(y));
    int sc = crossing_sign(fixed_points(conjugate(g, x)), fixed_points(conjugate(g, y)));
    CHECK(s == sc);
  }
}

TEST_CASE("cyclic order predicate") {
  BoundaryPoint a = BoundaryPoint::rational(0, 1);
  BoundaryPoint b = BoundaryPoint::rational(1, 1);
  BoundaryPoint c = BoundaryPoint::rational(2, 1);
  CHECK(cyclic_ccw(a, b, c));
  CHECK_FALSE(cyclic_ccw(a, c, b));
  // Wrapping through infinity: 2 -> 0 passes the far arc, so 1 is not inside.
  CHECK_FALSE(cyclic_ccw(c, b, a));
  CHECK(cyclic_ccw(b, c, a));
}
