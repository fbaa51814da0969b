#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "morrey/geometry.hpp"
#include "morrey/weights.hpp"

using namespace morrey;

namespace {
const GridSpec kSpec{1, 16.0, 1 << 12};
}

TEST_CASE("classify") {
  CHECK(classify({{0.0, 0.0}, 1.0}) == BallType::I);
  CHECK(classify({{1.0, 0.0}, 0.25}) == BallType::II);  // r = |x|/4 exactly
  CHECK(classify({{1.0, 0.0}, 0.3}) == BallType::III);
  // every ball gets exactly one type
  for (double c : {0.0, 0.5, 2.0})
    for (double r : {0.1, 0.125, 1.0}) {
      BallType t = classify({{c, 0.0}, r});
      int matches = (t == BallType::I) + (t == BallType::II) + (t == BallType::III);
      CHECK(matches == 1);
    }
}

TEST_CASE("enumerate_balls") {
  BallFamilySpec fam;
  fam.levels = 6;
  fam.radii_per_center = 3;

  SUBCASE("type-ii-only yields only type II balls") {
    fam.strategy = FamilyStrategy::TypeII_only;
    for (const Ball& b : enumerate_balls(fam, kSpec)) CHECK(classify(b) == BallType::II);
  }
  SUBCASE("type-i-ii contains the dyadic origin balls") {
    fam.strategy = FamilyStrategy::TypeI_II;
    auto balls = enumerate_balls(fam, kSpec);
    for (int k = 0; k <= fam.levels; ++k) {
      bool found = false;
      for (const Ball& b : balls)
        found = found || (b.center.norm() == 0.0 && b.radius == kSpec.R * std::ldexp(1.0, -k));
      CHECK(found);
    }
  }
  SUBCASE("deterministic and finite; all is a superset") {
    fam.strategy = FamilyStrategy::All;
    auto a1 = enumerate_balls(fam, kSpec);
    auto a2 = enumerate_balls(fam, kSpec);
    REQUIRE(a1.size() == a2.size());
    for (std::size_t i = 0; i < a1.size(); ++i) {
      CHECK(a1[i].center.x == a2[i].center.x);
      CHECK(a1[i].radius == a2[i].radius);
    }
    auto key = [](const Ball& b) {
      return std::tuple<double, double, double>(b.center.x, b.center.y, b.radius);
    };
    std::set<std::tuple<double, double, double>> all_keys;
    for (const Ball& b : a1) all_keys.insert(key(b));
    for (FamilyStrategy s : {FamilyStrategy::TypeI_II, FamilyStrategy::TypeII_only}) {
      BallFamilySpec sub = fam;
      sub.strategy = s;
      for (const Ball& b : enumerate_balls(sub, kSpec)) CHECK(all_keys.count(key(b)) == 1);
    }
  }
  SUBCASE("every dyadic level carries the extremal shape r = |x|/4") {
    fam.strategy = FamilyStrategy::TypeII_only;
    auto balls = enumerate_balls(fam, kSpec);
    for (int k = 1; k <= fam.levels; ++k) {
      double c = kSpec.R * std::ldexp(1.0, -k);
      bool found = false;
      for (const Ball& b : balls) found = found || (b.center.x == c && b.radius == c / 4.0);
      CHECK(found);
    }
  }
  SUBCASE("2D angular lattice") {
    GridSpec spec2{2, 16.0, 64};
    BallFamilySpec f2 = BallFamilySpec::defaults(2);
    auto balls = enumerate_balls(f2, spec2);
    CHECK(balls.size() > 0);
    int type2 = 0;
    for (const Ball& b : balls)
      if (classify(b) == BallType::II) ++type2;
    CHECK(type2 == f2.levels * f2.angular * f2.radii_per_center);
  }
}

TEST_CASE("reduction_admissible") {
  MorreyParams a{1.0, 0.5, 0.0, 1};
  CHECK(reduction_admissible(a, Weight::constant(1.0, 1)));

  MorreyParams b{1.0, -0.5, 1.0, 1};
  CHECK(reduction_admissible(b, Weight::power(0.0, 1)));

  MorreyParams c{1.0, -1.0, 0.5, 1};
  CHECK_FALSE(reduction_admissible(c, Weight::power(0.5, 1)));

  // sigma_w route for non-power weights with metadata
  Weight s = Weight::sampled(GridFunction(kSpec, 1.0));
  CHECK_THROWS_AS(reduction_admissible(a, s), std::invalid_argument);
  CHECK(reduction_admissible(a, s.with_sigma_w(2.0)));
}
