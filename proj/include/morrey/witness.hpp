#ifndef MORREY_WITNESS_HPP
#define MORREY_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "morrey/grid.hpp"
#include "morrey/params.hpp"
#include "morrey/weights.hpp"

namespace morrey {

/// Test functions driving the boundedness experiments:
///  - CharBall: indicator of a ball
///  - SingularPower: |x|^{-n} on the unit ball (the right-endpoint probe; its
///    origin cells carry divergent masses whenever the integrand fails local
///    integrability)
///  - DualPower: (w+eps)^{-(n-lambda2)/(pn-n+lambda1+lambda2)}, normalized to
///    peak 1 on its support
///  - OffsetBump: indicator of B(2 e1, 1/2), a type II ball away from 0
struct WitnessKind {
  enum class Tag { CharBall, SingularPower, DualPower, OffsetBump };
  Tag tag = Tag::CharBall;
  Point center{};
  double radius = 1.0;
  double epsilon = 0.5;  // DualPower only

  static WitnessKind char_ball(Point c, double r) { return {Tag::CharBall, c, r, 0.0}; }
  static WitnessKind char_unit() { return char_ball({0.0, 0.0}, 1.0); }
  static WitnessKind singular_power() { return {Tag::SingularPower, {0.0, 0.0}, 1.0, 0.0}; }
  static WitnessKind dual_power(double eps) { return {Tag::DualPower, {0.0, 0.0}, 0.0, eps}; }
  static WitnessKind offset_bump() { return {Tag::OffsetBump, {2.0, 0.0}, 0.5, 0.0}; }

  std::string name() const;
};

GridFunction build_witness(const WitnessKind&, const GridSpec&, const MorreyParams&, const Weight&);

/// Exact membership of a witness in L^{p,lambda}(|x|^beta), where a closed
/// form is available; nullopt when undetermined.
std::optional<bool> witness_in_space(const WitnessKind&, const MorreyParams&, double beta);

std::vector<WitnessKind> default_witnesses();       // the three range probes
std::vector<WitnessKind> rich_witness_catalog();    // 20 deterministic entries
WitnessKind witness_by_name(const std::string&);

}  // namespace morrey

#endif
