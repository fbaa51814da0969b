#include "morrey/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "morrey/weights.hpp"

namespace morrey {

BallType classify(const Ball& b) {
  double c = b.center.norm();
  if (c == 0.0) return BallType::I;
  return b.radius <= c / 4.0 ? BallType::II : BallType::III;
}

std::string to_string(FamilyStrategy s) {
  switch (s) {
    case FamilyStrategy::All: return "all";
    case FamilyStrategy::TypeI_II: return "type-i-ii";
    case FamilyStrategy::TypeII_only: return "type-ii-only";
  }
  return "?";
}

FamilyStrategy family_strategy_from_string(const std::string& s) {
  if (s == "all") return FamilyStrategy::All;
  if (s == "type-i-ii") return FamilyStrategy::TypeI_II;
  if (s == "type-ii-only") return FamilyStrategy::TypeII_only;
  throw std::invalid_argument("unknown ball family strategy: " + s);
}

BallFamilySpec BallFamilySpec::defaults(int n) {
  BallFamilySpec f;
  if (n == 2) {
    f.levels = 5;
    f.radii_per_center = 2;
  }
  return f;
}

std::string BallFamilySpec::describe() const {
  std::ostringstream os;
  os << to_string(strategy) << "/K" << levels << "/J" << radii_per_center << "/A" << angular;
  return os.str();
}

std::vector<Ball> enumerate_balls(const BallFamilySpec& fam, const GridSpec& spec) {
  if (fam.levels < 1 || fam.radii_per_center < 1 || fam.angular < 1)
    throw std::invalid_argument("enumerate_balls: lattice parameters must be positive");
  std::vector<Ball> out;
  const double R = spec.R;
  const bool want_I = fam.strategy != FamilyStrategy::TypeII_only;
  const bool want_III = fam.strategy == FamilyStrategy::All;

  if (want_I)
    for (int k = 0; k <= fam.levels; ++k) out.push_back({Point{0.0, 0.0}, R * std::ldexp(1.0, -k)});

  auto directions = [&]() {
    std::vector<Point> dirs;
    if (spec.n == 1) {
      dirs.push_back({1.0, 0.0});
      dirs.push_back({-1.0, 0.0});
    } else {
      for (int a = 0; a < fam.angular; ++a) {
        double th = 2.0 * M_PI * a / fam.angular;
        dirs.push_back({std::cos(th), std::sin(th)});
      }
    }
    return dirs;
  }();

  for (int k = 1; k <= fam.levels; ++k) {
    double c = R * std::ldexp(1.0, -k);
    for (const Point& dir : directions) {
      Point center{c * dir.x, c * dir.y};
      for (int j = 0; j < fam.radii_per_center; ++j)
        out.push_back({center, c / 4.0 * std::ldexp(1.0, -j)});
      if (want_III)
        for (double factor : {0.5, 1.0, 2.0}) out.push_back({center, c * factor});
    }
  }
  return out;
}

bool reduction_admissible(const MorreyParams& params, const Weight& w) {
  params.validate();
  if (w.is_power()) {
    double beta = w.power_exponent();
    return params.lambda1 + params.lambda2 * (1.0 + beta / params.n) > 0.0;
  }
  auto sw = w.sigma_w_opt();
  if (!sw) throw std::invalid_argument("reduction_admissible: weight carries no sigma_w metadata");
  return params.lambda1 * conjugate_exponent(*sw) + params.lambda2 > 0.0;
}

}  // namespace morrey
