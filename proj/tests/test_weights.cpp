#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "morrey/radial.hpp"
#include "morrey/weights.hpp"

using namespace morrey;

namespace {

const GridSpec kSpec1{1, 16.0, 1 << 12};

// origin-centered shrinking family: where power-weight A_p functionals blow up
std::vector<Ball> shrinking_family(int levels = 12) {
  std::vector<Ball> balls;
  for (int k = 0; k <= levels; ++k) balls.push_back({{0.0, 0.0}, std::ldexp(1.0, -k)});
  for (int k = 0; k <= 4; ++k) balls.push_back({{std::ldexp(1.0, -k), 0.0}, std::ldexp(1.0, -k - 2)});
  return balls;
}

}  // namespace

TEST_CASE("closed-form radial integrals") {
  CHECK(power_segment(0.5, 0.0, 1.0) == doctest::Approx(2.0 / 3.0));
  CHECK(power_segment(-1.5, 0.0, 1.0) == kInf);
  CHECK(power_interval_mass(0.5, -1.0, 1.0) == doctest::Approx(4.0 / 3.0));
  CHECK(power_annulus_mass(-1.0, 0.0, 2.0, 2) == doctest::Approx(4.0 * M_PI));
  CHECK(power_ball_mass(-2.0, 1.0, 2) == kInf);
  // g = 0 square: plain area
  CHECK(power_square_mass(0.0, 0.5) == doctest::Approx(1.0));
  // against 1D-exact tensor value for g = 2: int |y|^2 over [-s,s]^2 = 8 s^4/3
  CHECK(power_square_mass(2.0, 1.0) == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("ap_membership_power") {
  CHECK(ap_membership_power(0.0, 2.0, 1));
  CHECK(ap_membership_power(-0.5, 1.0, 1));
  CHECK_FALSE(ap_membership_power(1.5, 2.0, 1));
  CHECK_FALSE(ap_membership_power(0.5, 1.0, 1));
  CHECK_THROWS_AS(ap_membership_power(0.0, 0.5, 1), std::invalid_argument);
}

TEST_CASE("ap_constant_estimate") {
  auto family = shrinking_family();
  SUBCASE("constant weight gives exactly 1") {
    CHECK(ap_constant_estimate(Weight::constant(1.0, 1), 2.0, family, kSpec1) == doctest::Approx(1.0));
  }
  SUBCASE("|x|^0.5, p=2: scale-invariant value 4/3 on origin balls") {
    Weight w = Weight::power(0.5, 1);
    for (double r : {1.0, 0.1, 0.01}) {
      std::vector<Ball> one{{{0.0, 0.0}, r}};
      CHECK(ap_constant_estimate(w, 2.0, one, kSpec1) == doctest::Approx(4.0 / 3.0));
    }
  }
  SUBCASE("|x|^1.5, p=2: dual mass diverges at the origin") {
    CHECK(ap_constant_estimate(Weight::power(1.5, 1), 2.0, family, kSpec1) == kInf);
  }
  CHECK_THROWS_AS(ap_constant_estimate(Weight::constant(1.0, 1), 1.0, family, kSpec1),
                  std::invalid_argument);
}

TEST_CASE("a1_constant_estimate") {
  std::vector<Ball> unit{{{0.0, 0.0}, 1.0}};
  CHECK(a1_constant_estimate(Weight::constant(1.0, 1), unit, kSpec1) == doctest::Approx(1.0));
  // avg of |x|^{-1/2} over [-1,1] is 2, essinf at |x| = 1 is 1
  CHECK(a1_constant_estimate(Weight::power(-0.5, 1), unit, kSpec1) == doctest::Approx(2.0));
  CHECK(a1_constant_estimate(Weight::power(0.5, 1), unit, kSpec1) == kInf);
}

TEST_CASE("sigma_w_power") {
  CHECK(sigma_w_power(0.0, 1) == kInf);
  CHECK(sigma_w_power(-1.0, 2) == doctest::Approx(2.0));
  CHECK(sigma_w_power(1.0, 1) == kInf);
  CHECK_THROWS_AS(sigma_w_power(-1.0, 1), std::invalid_argument);
}

TEST_CASE("rh_check") {
  auto family = shrinking_family();
  CHECK(rh_check(Weight::constant(1.0, 1), 1.5, family, kSpec1) == doctest::Approx(1.0));
  std::vector<Ball> unit{{{0.0, 0.0}, 1.0}};
  // ((int_0^1 t^{-3/4})^{2/3}) / (int_0^1 t^{-1/2}) with ball averages: 4^{2/3}/2
  double expected = std::pow(4.0, 2.0 / 3.0) / 2.0;
  CHECK(rh_check(Weight::power(-0.5, 1), 1.5, unit, kSpec1) == doctest::Approx(expected));
  CHECK(rh_check(Weight::power(-0.5, 1), 2.5, family, kSpec1) == kInf);
  CHECK_THROWS_AS(rh_check(Weight::constant(1.0, 1), 1.0, family, kSpec1), std::invalid_argument);
}

TEST_CASE("sigma_w endpoint behavior via rh_check sweep") {
  auto family = shrinking_family();
  for (double beta : {-0.8, -0.5, -0.2}) {
    Weight w = Weight::power(beta, 1);
    double sw = sigma_w_power(beta, 1);
    CHECK(std::isfinite(rh_check(w, sw - 0.2, family, kSpec1)));
    CHECK(rh_check(w, sw + 0.2, family, kSpec1) == kInf);
  }
}

TEST_CASE("product stability |x|^alpha w in RH_sigma") {
  auto family = shrinking_family();
  for (double beta : {-0.8, -0.5, -0.2}) {
    double sigma = sigma_w_power(beta, 1) - 0.2;
    double base = rh_check(Weight::power(beta, 1), sigma, family, kSpec1);
    for (double alpha : {0.3, 0.7, 1.5}) {
      double shifted = rh_check(Weight::shifted_power(alpha, beta, 1), sigma, family, kSpec1);
      CHECK(std::isfinite(shifted));
      CHECK(shifted <= std::max(base, 1.0) * 4.0);
    }
  }
}

TEST_CASE("measure_comparison_defect") {
  Ball B{{0.0, 0.0}, 1.0};
  SUBCASE("E = B gives exactly 1") {
    std::vector<std::pair<Region, Ball>> pairs{{Region::ball({0.0, 0.0}, 1.0), B}};
    CHECK(measure_comparison_defect(Weight::constant(1.0, 1), 1.5, pairs, kSpec1) == doctest::Approx(1.0));
  }
  SUBCASE("constant weight: ratio is (|E|/|B|)^{1/sigma}") {
    double sigma = 1.5;
    for (double r : {0.5, 0.25, 0.125}) {
      std::vector<std::pair<Region, Ball>> pairs{{Region::ball({0.0, 0.0}, r), B}};
      double got = measure_comparison_defect(Weight::constant(1.0, 1), sigma, pairs, kSpec1);
      CHECK(got == doctest::Approx(std::pow(r, 1.0 / sigma)));
    }
  }
  SUBCASE("|x|^{-1/2}, sigma=1.5: ratio r^{1/6}") {
    for (double r : {0.5, 0.25}) {
      std::vector<std::pair<Region, Ball>> pairs{{Region::ball({0.0, 0.0}, r), B}};
      double got = measure_comparison_defect(Weight::power(-0.5, 1), 1.5, pairs, kSpec1);
      CHECK(got == doctest::Approx(std::pow(r, 1.0 / 6.0)));
    }
  }
  SUBCASE("bounded uniformly below sigma_w, including annuli and off-center balls") {
    Weight w = Weight::power(-0.5, 1);
    std::vector<std::pair<Region, Ball>> pairs;
    for (int j = 1; j <= 10; ++j) {
      double r = std::ldexp(1.0, -j);
      pairs.push_back({Region::ball({0.0, 0.0}, r), B});
      pairs.push_back({Region::annulus({0.0, 0.0}, r / 2.0, r), B});
      pairs.push_back({Region::ball({0.5, 0.0}, r / 4.0), B});
    }
    double got = measure_comparison_defect(w, 1.5, pairs, kSpec1);
    CHECK(std::isfinite(got));
    CHECK(got <= 2.0);
  }
  SUBCASE("E not contained in B is rejected") {
    std::vector<std::pair<Region, Ball>> pairs{{Region::ball({0.9, 0.0}, 0.5), B}};
    CHECK_THROWS_AS(measure_comparison_defect(Weight::constant(1.0, 1), 1.5, pairs, kSpec1),
                    std::invalid_argument);
  }
}

TEST_CASE("theta_power") {
  CHECK(theta_power(0.0, 1) == doctest::Approx(1.0));
  CHECK(theta_power(1.0, 1) == doctest::Approx(2.0));
  CHECK(theta_power(-1.0, 2) == doctest::Approx(0.5));
  CHECK_THROWS_AS(theta_power(-2.0, 2), std::invalid_argument);
}

TEST_CASE("membership agrees with divergence of the constant estimate") {
  auto family = shrinking_family();
  SUBCASE("p = 2: endpoint at n(p-1) = 1") {
    for (double beta : {-0.9, -0.5, 0.0, 0.5, 0.9, 1.1, 1.5}) {
      Weight w = Weight::power(beta, 1);
      bool member = ap_membership_power(beta, 2.0, 1);
      double est = ap_constant_estimate(w, 2.0, family, kSpec1);
      CHECK(member == std::isfinite(est));
    }
  }
  SUBCASE("p = 1: endpoint at 0") {
    for (double beta : {-0.9, -0.5, -0.05, 0.05, 0.5}) {
      Weight w = Weight::power(beta, 1);
      bool member = ap_membership_power(beta, 1.0, 1);
      double est = a1_constant_estimate(w, family, kSpec1);
      CHECK(member == std::isfinite(est));
    }
  }
}

TEST_CASE("weight metadata and theta ratio bound") {
  Weight w = Weight::power(0.5, 1);
  CHECK(w.theta() == doctest::Approx(1.5));
  CHECK(w.sigma_w() == kInf);
  // w(B(0,r))/w(B(0,R)) <= c (r/R)^{n theta} sampled over dyadic pairs
  double theta = w.theta();
  for (int k = 1; k <= 8; ++k) {
    double r = std::ldexp(1.0, -k), R = 1.0;
    double ratio = w.ball_mass({{0.0, 0.0}, r}, kSpec1) / w.ball_mass({{0.0, 0.0}, R}, kSpec1);
    CHECK(ratio <= std::pow(r / R, theta) * 1.0000001);
  }
  Weight s = Weight::sampled(GridFunction(kSpec1, 1.0)).with_sigma_w(3.0).with_theta(0.25);
  CHECK(s.sigma_w() == doctest::Approx(3.0));
  CHECK(s.theta() == doctest::Approx(0.25));
}
