#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldman/ball.hpp"
#include "goldman/cosets.hpp"
#include "goldman/errors.hpp"
#include "goldman/plane.hpp"
#include "testutil.hpp"

using namespace goldman;

namespace {
ProjectiveMatrix pm(long a, long b, long c, long d) {
  return ProjectiveMatrix{Int(a), Int(b), Int(c), Int(d)};
}
const SubgroupSpec kFull = SubgroupSpec::full();
}  // namespace

TEST_CASE("enumerate_ball at radius zero") {
  Ball b = enumerate_ball(0.0, kFull);
  REQUIRE(b.elements.size() == 2);
  CHECK(b.elements[0] == pm(0, 1, -1, 0));  // S
  CHECK(b.elements[1].is_identity());
  Ball g2 = enumerate_ball(0.0, SubgroupSpec::gamma(2));
  REQUIRE(g2.elements.size() == 1);
  CHECK(g2.elements[0].is_identity());
}

TEST_CASE("enumerate_ball catches the unit translations") {
  Ball b = enumerate_ball(0.97, kFull);
  CHECK(b.contains(evaluate("T")));
  CHECK(b.contains(evaluate("t")));
}

TEST_CASE("ball closure spot-check") {
  std::mt19937 rng(41);
  Ball b = enumerate_ball(3.0, kFull);
  std::uniform_int_distribution<std::size_t> pick(0, b.elements.size() - 1);
  for (int i = 0; i < 200; ++i) {
    ProjectiveMatrix m = compose(b.elements[pick(rng)], b.elements[pick(rng)]);
    if (displacement_radius(m) <= 3.0 - 1e-9) CHECK(b.contains(m));
  }
}

TEST_CASE("ball respects membership") {
  Ball b = enumerate_ball(2.5, SubgroupSpec::gamma0(2));
  CHECK(!b.elements.empty());
  for (const auto& m : b.elements) CHECK(is_member(SubgroupSpec::gamma0(2), m));
  CHECK_FALSE(b.contains(evaluate("L")));
}

TEST_CASE("exponent_of_power") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK(exponent_of_power(ProjectiveMatrix{}, x) == 0);
  CHECK(exponent_of_power(power(x, 5), x) == 5);
  CHECK(exponent_of_power(power(x, -3), x) == -3);
  CHECK_FALSE(exponent_of_power(evaluate("TTTSTTT"), x).has_value());
  CHECK_FALSE(exponent_of_power(evaluate("T"), x).has_value());
}

TEST_CASE("same_double_coset basics") {
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  ProjectiveMatrix g = evaluate("TLT");
  auto w = same_double_coset(g, g, x, y);
  REQUIRE(w.has_value());
  CHECK(w->first == 0);
  CHECK(w->second == 0);
  CHECK(same_double_coset(g, compose(x, compose(g, y)), x, y).has_value());
  ProjectiveMatrix t = evaluate("T");
  CHECK_FALSE(same_double_coset(power(t, 2), power(t, 3), x, y).has_value());
  CHECK_THROWS_AS(same_double_coset(g, g, evaluate("T"), y), DomainError);
}

TEST_CASE("same_double_coset finds random witnesses") {
  std::mt19937 rng(42);
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  std::uniform_int_distribution<long> e(-5, 5);
  for (int i = 0; i < 40; ++i) {
    ProjectiveMatrix g = test::random_element(rng, 6);
    long m = e(rng), k = e(rng);
    ProjectiveMatrix g2 = compose(power(x, m), compose(g, power(y, k)));
    auto w = same_double_coset(g, g2, x, y);
    REQUIRE(w.has_value());
    CHECK(compose(power(x, w->first), compose(g, power(y, w->second))) == g2);
  }
  // Large exponents exercise the monotone boundary-orbit scan.
  std::uniform_int_distribution<long> big(-25, 25);
  for (int i = 0; i < 6; ++i) {
    ProjectiveMatrix g = test::random_element(rng, 4);
    long m = big(rng), k = big(rng);
    ProjectiveMatrix g2 = compose(power(x, m), compose(g, power(y, k)));
    auto w = same_double_coset(g, g2, x, y);
    REQUIRE(w.has_value());
    CHECK(compose(power(x, w->first), compose(g, power(y, w->second))) == g2);
  }
}

TEST_CASE("crossing double cosets of the worked mutual pair") {
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  auto cosets = crossing_double_cosets(x, y, kFull);
  REQUIRE(cosets.size() == 4);
  ProjectiveMatrix t = evaluate("T");
  // T^-4, T^-3, T^2, T^3 land in four distinct cosets.
  for (long k : {-4L, -3L, 2L, 3L}) {
    int hits = 0;
    for (const auto& dc : cosets)
      if (same_double_coset(dc.rep, power(t, k), x, y)) ++hits;
    CHECK(hits == 1);
  }
  for (const auto& dc : cosets) {
    CHECK(dc.sign != 0);
    CHECK(classify(dc.term) == IsometryClass::Hyperbolic);
    CHECK(dc.term == compose(x, conjugate(dc.rep, y)));
  }
}

TEST_CASE("self crossing double cosets of TSTT") {
  // Four transversal crossing cosets; both crossing points of this
  // reciprocal class sit on order-2 elliptic orbits, and coincident-axis
  // cosets carry sign 0 and are omitted.
  ProjectiveMatrix x = evaluate("TSTT");
  auto cosets = crossing_double_cosets(x, x, kFull);
  CHECK(cosets.size() == 4);
  for (const auto& dc : cosets)
    CHECK_FALSE(same_double_coset(dc.rep, ProjectiveMatrix{}, x, x).has_value());
}

TEST_CASE("crossing double cosets validate membership") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK_THROWS_AS(crossing_double_cosets(x, x, SubgroupSpec::gamma0(2)), DomainError);
}

TEST_CASE("basepoint independence of the coset set") {
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  auto base = crossing_double_cosets(x, y, kFull);
  for (int shift : {-1, 1, 2}) {
    auto moved = crossing_double_cosets(x, y, kFull, shift);
    REQUIRE(moved.size() == base.size());
    for (const auto& dc : base) {
      int matched = 0;
      for (const auto& mc : moved)
        if (same_double_coset(dc.rep, mc.rep, x, y)) ++matched;
      CHECK(matched == 1);
    }
  }
}

TEST_CASE("coset count symmetry and conjugation invariance") {
  std::mt19937 rng(43);
  int done = 0;
  while (done < 12) {
    auto [x, y] = test::random_nonconjugate_hyperbolic_pair(rng, 6);
    auto a = crossing_double_cosets(x, y, kFull);
    auto b = crossing_double_cosets(y, x, kFull);
    CHECK(a.size() == b.size());
    ProjectiveMatrix g = test::random_element(rng, 6);
    auto c = crossing_double_cosets(conjugate(g, x), conjugate(g, y), kFull);
    CHECK(a.size() == c.size());
    ++done;
  }
}

TEST_CASE("segment cover agrees with certified ball enumeration") {
  // Independent completeness check: every crossing coset must own an element
  // in the ball of radius d(i,P0) + tau_x + tau_y/2 + d(i,A_y) + guard, so
  // grouping the crossing ball elements reproduces the fast enumeration.
  std::mt19937 rng(44);
  int done = 0;
  while (done < 8) {
    ProjectiveMatrix x = test::random_hyperbolic(rng, 4);
    ProjectiveMatrix y = test::random_hyperbolic(rng, 4);
    Axis ax = fixed_points(x), ay = fixed_points(y);
    GeodesicNumeric gx = geodesic_numeric(ax), gy = geodesic_numeric(ay);
    PlanePoint base{0, 1};
    double radius = hyperbolic_distance(base, gx.at(gx.closest_coord(base))) +
                    translation_length(x) + translation_length(y) / 2 +
                    hyperbolic_distance(base, gy.at(gy.closest_coord(base))) + 0.05;
    if (radius > 9.0) continue;  // keep the certified reference affordable
    Ball ball = enumerate_ball(radius, SubgroupSpec::full());
    std::vector<ProjectiveMatrix> groups;
    for (const auto& h : ball.elements) {
      if (crossing_sign(ax, fixed_points(conjugate(h, y))) == 0) continue;
      bool placed = false;
      for (const auto& g : groups)
        if (same_double_coset(g, h, x, y)) {
          placed = true;
          break;
        }
      if (!placed) groups.push_back(h);
    }
    auto fast = crossing_double_cosets(x, y, SubgroupSpec::full());
    CHECK(fast.size() == groups.size());
    for (const auto& g : groups) {
      int matched = 0;
      for (const auto& dc : fast)
        if (same_double_coset(dc.rep, g, x, y)) ++matched;
      CHECK(matched == 1);
    }
    ++done;
  }
}

TEST_CASE("geometric intersection oracle") {
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  CHECK(geometric_intersection_oracle(x, y, kFull) == 4);
  CHECK(geometric_intersection_oracle(evaluate("T"), x, kFull) == 0);
  ProjectiveMatrix xc = conjugate(evaluate("TL"), x);
  CHECK_THROWS_AS(geometric_intersection_oracle(x, xc, kFull), DomainError);
}

TEST_CASE("geometric self intersection oracle") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK(geometric_self_intersection_oracle(x, kFull) == 2);
  CHECK_THROWS_AS(geometric_self_intersection_oracle(power(x, 2), kFull), DomainError);
  CHECK_THROWS_AS(geometric_self_intersection_oracle(evaluate("T"), kFull), DomainError);
}
