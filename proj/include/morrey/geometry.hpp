#ifndef MORREY_GEOMETRY_HPP
#define MORREY_GEOMETRY_HPP

#include <string>
#include <vector>

#include "morrey/grid.hpp"
#include "morrey/params.hpp"

namespace morrey {

struct Ball {
  Point center{};
  double radius = 1.0;

  double measure(int n) const { return unit_ball_measure(n) * (n == 1 ? radius : radius * radius); }
};

/// I: centered at the origin. II: off-origin with r <= |x|/4.
/// III: off-origin with r > |x|/4.
enum class BallType { I, II, III };

BallType classify(const Ball&);

enum class FamilyStrategy { All, TypeI_II, TypeII_only };

std::string to_string(FamilyStrategy);
FamilyStrategy family_strategy_from_string(const std::string&);

/// Deterministic dyadic lattice of balls.
///   - type I: B(0, R 2^{-k}), k = 0..levels
///   - type II: centers with |c| = R 2^{-k}, k = 1..levels (both signs in 1D,
///     `angular` directions in 2D); radii r = (|c|/4) 2^{-j}, j = 0..radii_per_center-1,
///     so every dyadic scale carries the extremal shape r = |x|/4
///   - type III (strategy All only): radii |c|/2, |c|, 2|c| per center
struct BallFamilySpec {
  FamilyStrategy strategy = FamilyStrategy::TypeI_II;
  int levels = 12;
  int radii_per_center = 4;
  int angular = 8;

  static BallFamilySpec defaults(int n);
  std::string describe() const;
};

std::vector<Ball> enumerate_balls(const BallFamilySpec&, const GridSpec&);

class Weight;

/// True when the norm supremum may be restricted to type II balls:
/// lambda1 + lambda2 (1 + beta/n) > 0 for power weights, and
/// lambda1 sigma_w' + lambda2 > 0 otherwise. Requires weight metadata.
bool reduction_admissible(const MorreyParams&, const Weight&);

}  // namespace morrey

#endif
