#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "morrey/ranges.hpp"

using namespace morrey;

TEST_CASE("space_is_trivial") {
  CHECK(space_is_trivial({2.0, -0.5, 0.25, 1}, 0.5).trivial);          // -0.5+0.25*1.5 < 0
  CHECK_FALSE(space_is_trivial({2.0, 0.5, 0.0, 1}, -0.9).trivial);
  CHECK_FALSE(space_is_trivial({2.0, 0.5, 0.0, 1}, 5.0).trivial);
  CHECK(space_is_trivial({2.0, 0.75, 0.5, 1}, 0.0).trivial);           // sum > n
  SpaceVerdict linf = space_is_trivial({2.0, 0.5, 0.5, 1}, 0.0);
  CHECK_FALSE(linf.trivial);
  CHECK(linf.linfty_type);
  CHECK_THROWS_AS(space_is_trivial({2.0, 0.0, 0.0, 1}, -1.0), std::invalid_argument);
}

TEST_CASE("identify_space") {
  SUBCASE("transfer of the second exponent") {
    auto [params, beta] = identify_space({2.0, 0.0, 0.5, 1}, 0.8);
    CHECK(params.lambda1 == doctest::Approx(0.5));
    CHECK(params.lambda2 == 0.0);
    CHECK(beta == doctest::Approx(0.4));
  }
  SUBCASE("lambda2 = 0 is the identity") {
    auto [params, beta] = identify_space({2.0, 0.5, 0.0, 1}, 0.8);
    CHECK(params.lambda1 == doctest::Approx(0.5));
    CHECK(beta == doctest::Approx(0.8));
  }
  SUBCASE("general formula") {
    auto [params, beta] = identify_space({2.0, 0.25, 0.5, 1}, 1.0);
    CHECK(params.lambda1 == doctest::Approx(0.75));
    CHECK(beta == doctest::Approx(0.5));
  }
  SUBCASE("involutive onto its image") {
    auto [params, beta] = identify_space({2.0, 0.25, 0.5, 1}, 1.0);
    auto [params2, beta2] = identify_space(params, beta);
    CHECK(params2.lambda1 == doctest::Approx(params.lambda1));
    CHECK(params2.lambda2 == 0.0);
    CHECK(beta2 == doctest::Approx(beta));
  }
  SUBCASE("violated preconditions name the failed inequality") {
    CHECK_THROWS_WITH_AS(identify_space({2.0, -0.5, 0.25, 1}, 0.5),
                         doctest::Contains("lambda1 + lambda2(1+beta/n) > 0"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(identify_space({2.0, 0.75, 0.5, 1}, 0.0),
                         doctest::Contains("lambda1 + lambda2 < n"), std::invalid_argument);
  }
}

TEST_CASE("hl_necessity_class") {
  CHECK(hl_necessity_class({2.0, 0.0, 0.0, 1}) == doctest::Approx(2.0));
  CHECK(hl_necessity_class({2.0, 0.0, 0.5, 1}) == doctest::Approx(4.0));
  CHECK(hl_necessity_class({2.0, 0.5, 0.0, 1}) == doctest::Approx(2.5));
  CHECK_THROWS_AS(hl_necessity_class({2.0, 0.0, 1.0, 1}), std::invalid_argument);
}

TEST_CASE("hl_power_range") {
  SUBCASE("Samko case: [-0.5, 1.5)") {
    PowerRange r = hl_power_range({2.0, 0.5, 0.0, 1});
    CHECK(r.beta_lo == doctest::Approx(-0.5));
    CHECK(r.beta_hi == doctest::Approx(1.5));
    CHECK(r.lo_closed);
  }
  SUBCASE("Komori-Shirai case: (-1, 3)") {
    PowerRange r = hl_power_range({2.0, 0.0, 0.5, 1});
    CHECK(r.beta_lo == doctest::Approx(-1.0));
    CHECK(r.beta_hi == doctest::Approx(3.0));
    CHECK_FALSE(r.lo_closed);
  }
  SUBCASE("lambda2 = n case: (-0.5, inf)") {
    PowerRange r = hl_power_range({2.0, -0.5, 1.0, 1});
    CHECK(r.beta_lo == doctest::Approx(-0.5));
    CHECK(std::isinf(r.beta_hi));
    CHECK_FALSE(r.lo_closed);
  }
  SUBCASE("Lebesgue case lambda = 0: the classical (-n, n(p-1))") {
    PowerRange r = hl_power_range({2.0, 0.0, 0.0, 1});
    CHECK(r.beta_lo == doctest::Approx(-1.0));
    CHECK(r.beta_hi == doctest::Approx(1.0));
    CHECK_FALSE(r.lo_closed);
  }
  SUBCASE("nonempty whenever lambda1+lambda2 < n (numeric sweep)") {
    for (double p : {1.0, 1.5, 2.0, 3.0})
      for (double l1 : {0.0, 0.25, 0.5, 0.9})
        for (double l2 : {0.0, 0.25, 0.45}) {
          if (l1 + l2 >= 1.0) continue;
          if (l1 == 0.0 && l2 == 0.0) continue;
          PowerRange r = hl_power_range({p, l1, l2, 1});
          CHECK(r.beta_hi > r.beta_lo);
        }
  }
  CHECK_THROWS_AS(hl_power_range({2.0, 0.75, 0.5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hl_power_range({2.0, 0.5, 1.0, 1}), std::invalid_argument);  // lambda1 > 0 at lambda2 = n
}

TEST_CASE("hl_power_verdict boundary semantics") {
  MorreyParams samko{2.0, 0.5, 0.0, 1};
  CHECK(hl_power_verdict(samko, 0.5).verdict == Verdict::Bounded);
  CHECK(hl_power_verdict(samko, -0.75).verdict == Verdict::Unbounded);
  CHECK(hl_power_verdict(samko, 1.6).verdict == Verdict::Unbounded);
  RangeVerdict left = hl_power_verdict(samko, -0.5);
  CHECK(left.verdict == Verdict::Boundary);
  REQUIRE(left.boundary_included.has_value());
  CHECK(*left.boundary_included);  // closed left endpoint
  RangeVerdict right = hl_power_verdict(samko, 1.5);
  CHECK(right.verdict == Verdict::Boundary);
  REQUIRE(right.boundary_included.has_value());
  CHECK_FALSE(*right.boundary_included);  // open right endpoint
  // lambda2 = n endpoint: resolved as included through the unweighted transfer
  RangeVerdict pt = hl_power_verdict({2.0, -0.5, 1.0, 1}, -0.5);
  CHECK(pt.verdict == Verdict::Boundary);
  REQUIRE(pt.boundary_included.has_value());
  CHECK(*pt.boundary_included);
  CHECK(hl_power_verdict({2.0, -0.5, 0.25, 1}, 0.5).verdict == Verdict::TrivialSpace);
}

TEST_CASE("hl_general_sufficient") {
  SUBCASE("Samko bullet: sigma_w' = 1, alpha < lambda1") {
    GeneralSufficiency g = hl_general_sufficient({2.0, 0.5, 0.0, 1}, kInf, 1.0);
    CHECK(g.admissible);
    CHECK(g.alpha_hi == doctest::Approx(0.5));
  }
  SUBCASE("Komori-Shirai bullet: alpha < n lambda2 theta/(n-lambda2)") {
    GeneralSufficiency g = hl_general_sufficient({2.0, 0.0, 0.5, 1}, kInf, 1.0);
    CHECK(g.admissible);
    CHECK(g.alpha_hi == doctest::Approx(1.0));
  }
  SUBCASE("lambda2 = n bullet: any positive alpha") {
    GeneralSufficiency g = hl_general_sufficient({2.0, -0.5, 1.0, 1}, kInf, 1.0);
    CHECK(g.admissible);
    CHECK(std::isinf(g.alpha_hi));
  }
  CHECK_THROWS_AS(hl_general_sufficient({2.0, 0.0, -0.5, 1}, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("consistency of the sufficient alpha-interval with the sharp range at p = 1") {
  // with base weight 1 (sigma_w' = 1, theta = 1) and p = 1 the sufficient
  // alpha-interval equals the sharp beta-interval intersected with [0, inf);
  // only the sharp range keeps its closed (negative) left endpoint
  for (double l1 : {0.1, 0.3, 0.5})
    for (double l2 : {0.0, 0.2, 0.4}) {
      if (l1 + l2 >= 1.0) continue;
      MorreyParams params{1.0, l1, l2, 1};
      GeneralSufficiency g = hl_general_sufficient(params, kInf, 1.0);
      PowerRange r = hl_power_range(params);
      CHECK(g.admissible);
      CHECK(g.alpha_hi == doctest::Approx(r.beta_hi));
      CHECK(r.beta_lo < 0.0);
    }
}

TEST_CASE("extrapolation_region_full") {
  ExtrapolationRegion r = extrapolation_region_full(2.0, kInf, 1.0, 1);
  CHECK(r.member(0.25, 0.25, 0.0));
  CHECK_FALSE(r.member(0.5, 0.5, 0.0));  // lambda1 sigma' + lambda2 = n
  CHECK(r.first_violated(0.5, 0.5, 0.0) == "lambda1 sigma_w' + lambda2 < n");
  ExtrapolationRegion r2 = extrapolation_region_full(2.0, 2.0, 0.5, 1);
  CHECK_FALSE(r2.member(-0.25, 0.5, 0.0));  // sigma' = 2: boundary of the > 0 constraint
  CHECK(r2.member(0.1, 0.5, 0.0));
}

TEST_CASE("extrapolation_region_power") {
  CHECK(extrapolation_region_power(2.0, 0.0, 0.5, 0.0, 1));
  CHECK_FALSE(extrapolation_region_power(2.0, 1.2, 0.1, 0.0, 1));   // left constraint
  CHECK_FALSE(extrapolation_region_power(2.0, -0.5, 0.6, 0.0, 1));  // right constraint n+beta
}

TEST_CASE("extrapolation_region_limited") {
  // p+ = infinity reduces to the full region
  ExtrapolationRegion full = extrapolation_region_full(2.0, kInf, 1.0, 1);
  for (double l1 : {0.1, 0.25, 0.6})
    for (double alpha : {0.0, 0.05})
      CHECK(extrapolation_region_limited(2.0, 1.0, kInf, kInf, 1.0, l1, 0.0, alpha, 1) ==
            full.member(l1, 0.0, alpha));
  CHECK(extrapolation_region_limited(2.0, 1.0, 4.0, kInf, 1.0, 0.25, 0.0, 0.0, 1));
  CHECK_FALSE(extrapolation_region_limited(2.0, 1.0, 4.0, kInf, 1.0, 0.75, 0.0, 0.0, 1));
  CHECK_THROWS_AS(extrapolation_region_limited(5.0, 1.0, 4.0, kInf, 1.0, 0.25, 0.0, 0.0, 1),
                  std::invalid_argument);
  // the reverse Hoelder floor sigma_w > (p+/p)' gates membership
  CHECK_FALSE(extrapolation_region_limited(2.0, 1.0, 4.0, 1.5, 1.0, 0.25, 0.0, 0.0, 1));
}

TEST_CASE("embedding_exponents") {
  auto [q0, s0] = embedding_exponents({2.0, 0.0, 0.0, 1});
  CHECK(q0 == doctest::Approx(2.0));
  CHECK(s0 == doctest::Approx(1.0));
  auto [q1, s1] = embedding_exponents({2.0, 0.25, 0.25, 1});
  CHECK(q1 == doctest::Approx(4.0));
  CHECK(s1 == doctest::Approx(1.5));
  auto [q2, s2] = embedding_exponents({1.0, 0.5, 0.0, 1});
  CHECK(q2 == doctest::Approx(2.0));
  CHECK(s2 == doctest::Approx(2.0));
  CHECK_THROWS_AS(embedding_exponents({2.0, 0.5, 0.5, 1}), std::invalid_argument);
}

TEST_CASE("predicates are total on their domains: random sweep never throws") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> up(1.0, 4.0), ul(-1.5, 1.5), ub(-0.99, 4.0), ua(0.0, 2.0);
  int evaluated = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    double p = up(rng), l1 = ul(rng), l2 = ul(rng), beta = ub(rng), alpha = ua(rng);
    MorreyParams params{p, l1, l2, (trial % 2) + 1};
    if (beta <= -params.n) continue;
    space_is_trivial(params, beta);
    extrapolation_region_power(p, beta, l1, l2, params.n);
    extrapolation_region_full(p, 2.0, 1.0, params.n).member(l1, l2, alpha);
    if (l2 >= 0.0 && l2 <= params.n) hl_general_sufficient(params, 3.0, 1.0);
    if (l1 + l2 <= params.n) {
      try {
        hl_power_verdict(params, beta);
      } catch (const std::invalid_argument&) {
        // rejections (e.g. lambda2 = n with lambda1 out of range) are allowed
      }
    }
    ++evaluated;
  }
  CHECK(evaluated > 9000);
}

TEST_CASE("verdict JSON serialization carries the citation tag") {
  RangeVerdict v = hl_power_verdict({2.0, 0.5, 0.0, 1}, -0.5);
  nlohmann::json j = v;
  CHECK(j.at("verdict") == "boundary");
  CHECK(j.at("citation") == "power-range");
  CHECK(j.at("boundary_included") == true);
  CHECK(j.contains("binding_constraint"));
}
