#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldman/bracket.hpp"
#include "goldman/errors.hpp"
#include "testutil.hpp"

using namespace goldman;

namespace {
const SubgroupSpec kFull = SubgroupSpec::full();
}

TEST_CASE("worked mutual bracket cancels after grouping") {
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  BracketSum s = bracket(x, y, kFull);
  CHECK(s.zero());
  CHECK(s.manhattan() == 0);
  REQUIRE(s.pre_grouping_count() == 4);
  // Terms pair into two conjugate pairs, one pair conjugate to ST^6 and one
  // to STTST^7, with opposite signs inside each pair.
  ProjectiveMatrix c1 = evaluate("ST^6"), c2 = evaluate("STTST^7");
  int sign1 = 0, count1 = 0, sign2 = 0, count2 = 0;
  for (const auto& t : s.pre_grouping()) {
    if (are_conjugate(t.rep, c1, kFull)) {
      sign1 += t.sign;
      ++count1;
    } else if (are_conjugate(t.rep, c2, kFull)) {
      sign2 += t.sign;
      ++count2;
    }
  }
  CHECK(count1 == 2);
  CHECK(count2 == 2);
  CHECK(sign1 == 0);
  CHECK(sign2 == 0);
}

TEST_CASE("central classes bracket to zero") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK(bracket(evaluate("T"), x, kFull).zero());
  CHECK(bracket(x, evaluate("T"), kFull).zero());
  CHECK(bracket(evaluate("S"), x, kFull).zero());
  CHECK(bracket(evaluate("T"), x, kFull).pre_grouping_count() == 0);
}

TEST_CASE("diagonal bracket vanishes") {
  ProjectiveMatrix x = evaluate("TSTT");
  BracketSum s = bracket(x, x, kFull);
  CHECK(s.zero());
  CHECK(s.pre_grouping_count() == 4);
}

TEST_CASE("bracket of powers on the worked pair") {
  ProjectiveMatrix x = evaluate("TSTT"), y = evaluate("TTTSTTT");
  BracketSum b13 = bracket_of_powers(x, y, 1, 3, kFull);
  CHECK(b13.manhattan() == 12);
  CHECK(b13.pre_grouping_count() == 12);
  CHECK_FALSE(b13.zero());
}

TEST_CASE("self brackets of the reciprocal class") {
  // Transversal-coset values; the class runs through the order-2 cone point,
  // see the oracle tests for the matching halved count.
  ProjectiveMatrix x = evaluate("TSTT");
  BracketSum b12 = bracket_of_powers(x, x, 1, 2, kFull);
  CHECK(b12.pre_grouping_count() == 8);
  CHECK(b12.manhattan() == 4);
  BracketSum b13 = bracket_of_powers(x, x, 1, 3, kFull);
  CHECK(b13.pre_grouping_count() == 12);
  CHECK(b13.manhattan() == 12);
}

TEST_CASE("manhattan norm of a synthetic sum") {
  ProjectiveMatrix a = evaluate("TSTT"), b = evaluate("TTTSTTT");
  std::vector<BracketTerm> terms;
  for (int i = 0; i < 2; ++i) terms.push_back({1, {}, a});
  for (int i = 0; i < 3; ++i) terms.push_back({-1, {}, b});
  BracketSum s = BracketSum::group(std::move(terms), kFull);
  CHECK(manhattan_norm(s) == 5);
  CHECK(s.pre_grouping_count() == 5);
  CHECK(manhattan_norm(BracketSum{}) == 0);
}

TEST_CASE("antisymmetry on random pairs") {
  std::mt19937 rng(61);
  for (int i = 0; i < 30; ++i) {
    ProjectiveMatrix x = test::random_hyperbolic(rng, 8);
    ProjectiveMatrix y = test::random_hyperbolic(rng, 8);
    CHECK(bracket(x, y, kFull).same_grouped(bracket(y, x, kFull).negated()));
  }
}

TEST_CASE("bracket is conjugation invariant") {
  std::mt19937 rng(62);
  for (int i = 0; i < 20; ++i) {
    ProjectiveMatrix x = test::random_hyperbolic(rng, 7);
    ProjectiveMatrix y = test::random_hyperbolic(rng, 7);
    ProjectiveMatrix g = test::random_element(rng, 6);
    ProjectiveMatrix h = test::random_element(rng, 6);
    CHECK(bracket(x, y, kFull).same_grouped(bracket(conjugate(g, x), conjugate(h, y), kFull)));
  }
}

TEST_CASE("collation identity for small powers") {
  std::mt19937 rng(63);
  int done = 0;
  while (done < 10) {
    auto [x, y] = test::random_nonconjugate_hyperbolic_pair(rng, 5);
    for (long p : {1L, 2L})
      for (long q : {1L, 2L})
        CHECK(bracket_of_powers(x, y, p, q, kFull)
                  .same_grouped(bracket(power(x, p), power(y, q), kFull)));
    ++done;
  }
}

TEST_CASE("every bracket representative is hyperbolic") {
  std::mt19937 rng(64);
  for (int i = 0; i < 15; ++i) {
    ProjectiveMatrix x = test::random_hyperbolic(rng, 7);
    ProjectiveMatrix y = test::random_hyperbolic(rng, 7);
    for (const auto& t : bracket(x, y, kFull).pre_grouping())
      CHECK(classify(t.rep) == IsometryClass::Hyperbolic);
  }
}

TEST_CASE("jacobi defect vanishes") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK(jacobi_defect(x, evaluate("T^3ST^3"), evaluate("TST"), kFull).zero());
  CHECK(jacobi_defect(evaluate("T"), evaluate("TTTSTTT"), x, kFull).zero());
  CHECK(jacobi_defect(x, x, evaluate("TTTSTTT"), kFull).zero());

  std::mt19937 rng(65);
  for (int i = 0; i < 15; ++i) {
    ProjectiveMatrix a = test::random_hyperbolic(rng, 8);
    ProjectiveMatrix b = test::random_hyperbolic(rng, 8);
    ProjectiveMatrix c = test::random_hyperbolic(rng, 8);
    CHECK(jacobi_defect(a, b, c, kFull).zero());
  }
}

TEST_CASE("bracket requires membership") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK_THROWS_AS(bracket(x, x, SubgroupSpec::gamma0(2)), DomainError);
  CHECK_THROWS_AS(bracket_of_powers(x, x, 1, 2, SubgroupSpec::gamma0(2)), DomainError);
}

TEST_CASE("subgroup bracket groups by subgroup conjugacy") {
  SubgroupSpec g02 = SubgroupSpec::gamma0(2);
  std::mt19937 rng(66);
  int done = 0;
  while (done < 4) {
    ProjectiveMatrix x = test::random_element(rng, 6);
    ProjectiveMatrix y = test::random_element(rng, 6);
    if (!is_member(g02, x) || !is_member(g02, y)) continue;
    if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
      continue;
    BracketSum s = bracket(x, y, g02);
    long coeff_total = 0;
    for (const auto& e : s.entries()) {
      coeff_total += e.coeff;
      CHECK(is_member(g02, e.rep));
    }
    long sign_total = 0;
    for (const auto& t : s.pre_grouping()) sign_total += t.sign;
    CHECK(coeff_total == sign_total);
    ++done;
  }
}
