#ifndef MORREY_NORMS_HPP
#define MORREY_NORMS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "morrey/geometry.hpp"
#include "morrey/grid.hpp"
#include "morrey/integrate.hpp"
#include "morrey/ranges.hpp"
#include "morrey/weights.hpp"

namespace morrey {

/// r^{lambda1} (RadiusPower) vs |B|^{lambda1/n} (MeasurePower) in the
/// normalizer; the two differ per ball by the exact factor c_n^{lambda1/(np)}.
/// Weak norms always use MeasurePower.
enum class Normalization { RadiusPower, MeasurePower };

/// Supremum over a finite family: always a lower bound of the true norm.
struct NormEstimate {
  double value = 0.0;
  Ball argmax{{0.0, 0.0}, 1.0};
  std::size_t balls_examined = 0;
  std::string strategy;
  bool lower_bound = true;
  bool domain_truncated = false;
  std::optional<SpaceVerdict> triviality;  // pre-screen result for power weights
};

/// [ (1/(N(B) w(B)^{lambda2/n})) \int_B |f|^p w ]^{1/p} with
/// N(B) = r^{lambda1} or |B|^{lambda1/n}; +inf when a singular cell
/// contributes a divergent integral.
double ball_functional(const GridFunction& f, const Weight& w, const MorreyParams&, const Ball&,
                       Normalization = Normalization::RadiusPower);

NormEstimate morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams&,
                         std::span<const Ball>, Normalization = Normalization::RadiusPower,
                         std::string strategy_name = {});
NormEstimate morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams&,
                         const BallFamilySpec&, Normalization = Normalization::RadiusPower);

/// sup_t [ t^p w({|f|>t} cap B) / (|B|^{lambda1/n} w(B)^{lambda2/n}) ]^{1/p}.
/// Levels default to the distinct values of |f| in the ball, nudged below
/// themselves.
double weak_ball_functional(const GridFunction& f, const Weight& w, const MorreyParams&, const Ball&,
                            std::span<const double> levels = {});

NormEstimate weak_morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams&,
                              std::span<const Ball>, std::span<const double> levels = {},
                              std::string strategy_name = {});
NormEstimate weak_morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams&,
                              const BallFamilySpec&, std::span<const double> levels = {});

/// Generalized two-weight supremum sup_B [ u(B)^{-1} \int_B |f|^p w ]^{1/p}
/// for an arbitrary positive ball function u.
struct BallWeightDescriptor {
  std::function<double(const Ball&)> eval;
  std::string name;
};

NormEstimate two_weight_norm(const GridFunction& f, const BallWeightDescriptor& u, const Weight& w,
                             double p, std::span<const Ball>);

}  // namespace morrey

#endif
