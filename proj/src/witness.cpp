#include "morrey/witness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "morrey/ranges.hpp"

namespace morrey {

std::string WitnessKind::name() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::CharBall:
      if (center.norm() == 0.0 && radius == 1.0) return "char-unit";
      os << "char(" << center.x;
      if (center.y != 0.0) os << ";" << center.y;
      os << ";r=" << radius << ")";
      return os.str();
    case Tag::SingularPower: return "singular-power";
    case Tag::DualPower:
      os << "dual-power(eps=" << epsilon << ")";
      return os.str();
    case Tag::OffsetBump: return "offset-bump";
  }
  return "?";
}

GridFunction build_witness(const WitnessKind& kind, const GridSpec& spec,
                           const MorreyParams& params, const Weight& w) {
  spec.validate();
  switch (kind.tag) {
    case WitnessKind::Tag::CharBall:
    case WitnessKind::Tag::OffsetBump: {
      SupportTag tag{kind.center, kind.radius, 1.0, 0.0};
      GridFunction f = GridFunction::from_function(spec, [&](const Point& p) { return tag.eval(p); });
      f.set_tag(tag);
      return f;
    }
    case WitnessKind::Tag::SingularPower: {
      SupportTag tag{{0.0, 0.0}, 1.0, 1.0, -static_cast<double>(spec.n)};
      GridFunction f = GridFunction::from_function(spec, [&](const Point& p) { return tag.eval(p); });
      f.set_tag(tag);
      return f;
    }
    case WitnessKind::Tag::DualPower: {
      double denom = params.p * params.n - params.n + params.lambda1 + params.lambda2;
      if (std::fabs(denom) < kBoundaryTol)
        throw std::invalid_argument("dual-power witness undefined: pn-n+lambda1+lambda2 = 0");
      double expo = -(params.n - params.lambda2) / denom;
      double support = spec.R / 2.0;
      GridFunction f = GridFunction::from_function(spec, [&](const Point& p) {
        if (p.norm() > support) return 0.0;
        return std::pow(w(p) + kind.epsilon, expo);
      });
      double peak = f.max_abs();
      if (peak > 0.0 && std::isfinite(peak)) f = f.scaled(1.0 / peak);
      return f;
    }
  }
  throw std::logic_error("unreachable witness kind");
}

std::optional<bool> witness_in_space(const WitnessKind& kind, const MorreyParams& params, double beta) {
  params.validate();
  const double n = params.n;
  SpaceVerdict sv = space_is_trivial(params, beta);
  if (sv.trivial) return false;
  double factor = 1.0 - params.lambda2 / n;
  switch (kind.tag) {
    case WitnessKind::Tag::SingularPower:
      // membership of |x|^{-n} chi_{B(0,1)} binds at the right endpoint
      return beta * factor >= n * (params.p - 1.0) + params.lambda_sum() - kBoundaryTol;
    case WitnessKind::Tag::CharBall:
    case WitnessKind::Tag::DualPower: {
      if (kind.tag == WitnessKind::Tag::CharBall && kind.center.norm() > 0.0) return true;
      // bounded profile around the origin: small origin-centered balls bind
      return (n + beta) * factor >= params.lambda1 - kBoundaryTol;
    }
    case WitnessKind::Tag::OffsetBump: return true;
  }
  return std::nullopt;
}

std::vector<WitnessKind> default_witnesses() {
  return {WitnessKind::char_unit(), WitnessKind::offset_bump(), WitnessKind::singular_power()};
}

std::vector<WitnessKind> rich_witness_catalog() {
  std::vector<WitnessKind> cat;
  for (double r : {0.25, 0.5, 1.0, 2.0}) cat.push_back(WitnessKind::char_ball({0.0, 0.0}, r));
  for (int j = -2; j <= 2; ++j) {
    double c = std::ldexp(1.0, j);
    cat.push_back(WitnessKind::char_ball({c, 0.0}, c / 4.0));
    cat.push_back(WitnessKind::char_ball({-c, 0.0}, c / 4.0));
  }
  cat.push_back(WitnessKind::offset_bump());
  cat.push_back(WitnessKind::char_ball({4.0, 0.0}, 1.0));
  cat.push_back(WitnessKind::char_ball({-3.0, 0.0}, 0.5));
  cat.push_back(WitnessKind::char_ball({0.5, 0.0}, 0.05));
  cat.push_back(WitnessKind::dual_power(0.5));
  cat.push_back(WitnessKind::dual_power(0.05));
  return cat;  // 20 entries
}

WitnessKind witness_by_name(const std::string& name) {
  if (name == "char-unit") return WitnessKind::char_unit();
  if (name == "offset-bump") return WitnessKind::offset_bump();
  if (name == "singular-power") return WitnessKind::singular_power();
  if (name == "dual-power") return WitnessKind::dual_power(0.5);
  throw std::invalid_argument("unknown witness: " + name);
}

}  // namespace morrey
