#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldman/errors.hpp"
#include "goldman/matrix.hpp"
#include "goldman/subgroup.hpp"
#include "testutil.hpp"

using namespace goldman;

namespace {
ProjectiveMatrix pm(long a, long b, long c, long d) {
  return ProjectiveMatrix{Int(a), Int(b), Int(c), Int(d)};
}
}  // namespace

TEST_CASE("parse_word basics") {
  CHECK(parse_word("TSTT").letters() ==
        std::vector<Gen>{Gen::T, Gen::S, Gen::T, Gen::T});
  CHECK(parse_word("").empty());
  CHECK(parse_word("T^3 S T^-2 T^-1").letters() ==
        std::vector<Gen>{Gen::T, Gen::T, Gen::T, Gen::S, Gen::Tinv, Gen::Tinv, Gen::Tinv});
  // R is an alias for T, and S has order two.
  CHECK(parse_word("R^2") == parse_word("TT"));
  CHECK(parse_word("SS").empty());
  CHECK(parse_word("Tt").empty());
  CHECK_THROWS_AS(parse_word("TX"), DomainError);
  CHECK_THROWS_AS(parse_word("T^"), DomainError);
  CHECK_THROWS_AS(parse_word("T^+"), DomainError);
}

TEST_CASE("word rendering round-trips") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    GroupWord w = test::random_word(rng, 12);
    CHECK(parse_word(render_word(w)) == w);
  }
}

TEST_CASE("evaluate on generators and words") {
  CHECK(evaluate("S") == pm(0, -1, 1, 0));
  CHECK(evaluate("") == ProjectiveMatrix{});
  CHECK(evaluate("TSTT") == pm(1, 1, 1, 2));
  CHECK(evaluate("TTTSTTT") == pm(3, 8, 1, 3));
  CHECK(evaluate("L") == pm(1, 0, 1, 1));
}

TEST_CASE("sign canonicalization") {
  CHECK(pm(0, -1, 1, 0) == pm(0, 1, -1, 0));
  CHECK(pm(-1, 0, 0, -1).is_identity());
  CHECK(pm(-1, -1, -1, -2) == pm(1, 1, 1, 2));
  CHECK_THROWS_AS(pm(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("compose, inverse, power") {
  ProjectiveMatrix x = evaluate("TSTT");
  CHECK(power(evaluate("T"), 3) == pm(1, 3, 0, 1));
  CHECK(power(x, 2) == pm(2, 3, 3, 5));
  CHECK(inverse(pm(1, 1, 1, 2)) == pm(2, -1, -1, 1));
  CHECK(power(x, 0).is_identity());
  CHECK(compose(x, inverse(x)).is_identity());
}

TEST_CASE("group law properties on random elements") {
  std::mt19937 rng(12);
  for (int i = 0; i < 60; ++i) {
    ProjectiveMatrix m = test::random_element(rng, 10);
    CHECK(compose(m, inverse(m)).is_identity());
    std::uniform_int_distribution<int> e(-8, 8);
    int a = e(rng), b = e(rng);
    CHECK(power(m, a + b) == compose(power(m, a), power(m, b)));
  }
}

TEST_CASE("classify") {
  CHECK(classify(pm(1, 1, 1, 2)) == IsometryClass::Hyperbolic);
  CHECK(classify(pm(1, 1, 0, 1)) == IsometryClass::Parabolic);
  CHECK(classify(pm(0, -1, 1, 0)) == IsometryClass::Elliptic);
  CHECK(classify(ProjectiveMatrix{}) == IsometryClass::Identity);
}

TEST_CASE("trace_of_power") {
  ProjectiveMatrix m = pm(1, 1, 1, 2);
  CHECK(trace_of_power(m, 1) == 3);
  CHECK(trace_of_power(m, 3) == 18);
  CHECK(trace_of_power(ProjectiveMatrix{}, 7) == 2);
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    ProjectiveMatrix r = test::random_element(rng, 10);
    std::uniform_int_distribution<int> e(1, 12);
    int n = e(rng);
    CHECK(trace_of_power(r, n) == abs(power(r, n).trace()));
  }
}

TEST_CASE("translation_length") {
  CHECK(translation_length(pm(1, 1, 1, 2)) == doctest::Approx(2 * std::acosh(1.5)).epsilon(1e-12));
  CHECK(translation_length(pm(3, 8, 1, 3)) == doctest::Approx(2 * std::acosh(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(translation_length(pm(1, 1, 0, 1)), DomainError);

  std::mt19937 rng(14);
  for (int i = 0; i < 30; ++i) {
    ProjectiveMatrix m = test::random_hyperbolic(rng, 8);
    double t1 = translation_length(m);
    for (int n = 2; n <= 6; ++n) {
      double tn = translation_length(power(m, n));
      CHECK(std::abs(tn - n * t1) / tn < 1e-9);
    }
  }
}

TEST_CASE("is_member") {
  CHECK_FALSE(is_member(SubgroupSpec::gamma0(2), pm(1, 1, 1, 2)));
  CHECK(is_member(SubgroupSpec::gamma0(2), pm(1, 1, 2, 3)));
  CHECK(is_member(SubgroupSpec::full(), pm(1, 1, 1, 2)));
  // Sign canonicalization must not affect membership.
  CHECK(is_member(SubgroupSpec::gamma1(5), pm(-1, 0, -5, -1)));
  CHECK(is_member(SubgroupSpec::gamma(2), pm(1, 2, 2, 5)));
  CHECK_FALSE(is_member(SubgroupSpec::gamma(2), pm(1, 1, 2, 3)));
}

TEST_CASE("is_member respects the group law") {
  std::mt19937 rng(15);
  SubgroupSpec specs[] = {SubgroupSpec::gamma0(3), SubgroupSpec::gamma1(4), SubgroupSpec::gamma(2)};
  for (const auto& spec : specs) {
    std::vector<ProjectiveMatrix> members;
    while (members.size() < 12) {
      ProjectiveMatrix m = test::random_element(rng, 10);
      if (is_member(spec, m)) members.push_back(m);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      CHECK(is_member(spec, inverse(members[i])));
      for (std::size_t j = 0; j < members.size(); ++j)
        CHECK(is_member(spec, compose(members[i], members[j])));
    }
  }
}

TEST_CASE("matrix literal parsing") {
  CHECK(parse_matrix("[1,1,1,2]") == pm(1, 1, 1, 2));
  CHECK(parse_matrix(" [ 2 , -1 , -1 , 1 ] ") == pm(2, -1, -1, 1));
  CHECK_THROWS_AS(parse_matrix("[1,1,1]"), DomainError);
  CHECK_THROWS_AS(parse_matrix("[1,1,1,1]"), DomainError);
}
