#include "morrey/norms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace morrey {

namespace {

double normalizer(const Weight& w, const MorreyParams& params, const Ball& B, Normalization norm,
                  const GridSpec& spec) {
  double N = norm == Normalization::RadiusPower ? std::pow(B.radius, params.lambda1)
                                                : std::pow(B.measure(params.n), params.lambda1 / params.n);
  double wb = 1.0;
  if (params.lambda2 != 0.0) {
    double mass = w.ball_mass(B, spec);
    if (!(mass > 0.0)) throw std::invalid_argument("ball functional: w(B) = 0");
    wb = std::pow(mass, params.lambda2 / params.n);
  }
  return N * wb;
}

std::optional<SpaceVerdict> prescreen(const Weight& w, const MorreyParams& params) {
  if (!w.is_power()) return std::nullopt;
  return space_is_trivial(params, w.power_exponent());
}

template <class PerBall>
NormEstimate max_over_family(std::span<const Ball> balls, std::string strategy, PerBall&& fn) {
  if (balls.empty()) throw std::invalid_argument("norm: empty ball family");
  NormEstimate est;
  est.strategy = std::move(strategy);
  est.balls_examined = balls.size();
  est.argmax = balls[0];
  for (const Ball& B : balls) {
    auto [v, truncated] = fn(B);
    est.domain_truncated = est.domain_truncated || truncated;
    if (v > est.value || (std::isinf(v) && !std::isinf(est.value))) {
      est.value = v;
      est.argmax = B;
      if (std::isinf(v)) break;  // divergence propagates; offending ball recorded
    }
  }
  return est;
}

}  // namespace

double ball_functional(const GridFunction& f, const Weight& w, const MorreyParams& params,
                       const Ball& B, Normalization norm) {
  params.validate();
  GridFunction fp = f.abs_pow(params.p);
  IntegralResult num = integrate(fp, w, B);
  double den = normalizer(w, params, B, norm, f.spec());
  return std::pow(num.value / den, 1.0 / params.p);
}

NormEstimate morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams& params,
                         std::span<const Ball> balls, Normalization norm, std::string strategy_name) {
  params.validate();
  GridFunction fp = f.abs_pow(params.p);
  NormEstimate est = max_over_family(balls, std::move(strategy_name), [&](const Ball& B) {
    IntegralResult r = integrate(fp, w, B);
    double den = normalizer(w, params, B, norm, f.spec());
    return std::pair<double, bool>(std::pow(r.value / den, 1.0 / params.p), r.domain_truncated);
  });
  est.triviality = prescreen(w, params);
  return est;
}

NormEstimate morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams& params,
                         const BallFamilySpec& fam, Normalization norm) {
  auto balls = enumerate_balls(fam, f.spec());
  return morrey_norm(f, w, params, balls, norm, fam.describe());
}

double weak_ball_functional(const GridFunction& f, const Weight& w, const MorreyParams& params,
                            const Ball& B, std::span<const double> levels) {
  params.validate();
  if (has_infinite_value(f, B)) return kInf;
  if (touches_singularity(f, B) && w.is_power()) {
    // sup_t t^p w({coef |y|^e > t} cap cell) ~ t^{p - (n+beta)/|e|}: divergent
    // exactly when p|e| > n + beta
    double e = -f.tag()->exponent;
    if (params.p * e > params.n + w.power_exponent() + kBoundaryTol) return kInf;
  }
  std::vector<double> own;
  if (levels.empty()) {
    own = superlevel_levels(f, B);
    levels = own;
  }
  if (levels.empty()) return 0.0;
  double den = normalizer(w, params, B, Normalization::MeasurePower, f.spec());
  double best = 0.0;
  for (double t : levels) {
    if (!(t > 0.0)) continue;
    IntegralResult m = superlevel_mass(f, w, B, t);
    best = std::max(best, std::pow(t, params.p) * m.value);
  }
  return std::pow(best / den, 1.0 / params.p);
}

NormEstimate weak_morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams& params,
                              std::span<const Ball> balls, std::span<const double> levels,
                              std::string strategy_name) {
  params.validate();
  NormEstimate est = max_over_family(balls, std::move(strategy_name), [&](const Ball& B) {
    return std::pair<double, bool>(weak_ball_functional(f, w, params, B, levels), false);
  });
  est.triviality = prescreen(w, params);
  return est;
}

NormEstimate weak_morrey_norm(const GridFunction& f, const Weight& w, const MorreyParams& params,
                              const BallFamilySpec& fam, std::span<const double> levels) {
  auto balls = enumerate_balls(fam, f.spec());
  return weak_morrey_norm(f, w, params, balls, levels, fam.describe());
}

NormEstimate two_weight_norm(const GridFunction& f, const BallWeightDescriptor& u, const Weight& w,
                             double p, std::span<const Ball> balls) {
  if (!(p >= 1.0)) throw std::invalid_argument("two_weight_norm: p >= 1 required");
  GridFunction fp = f.abs_pow(p);
  return max_over_family(balls, u.name, [&](const Ball& B) {
    double ub = u.eval(B);
    if (!(ub > 0.0)) throw std::invalid_argument("two_weight_norm: u(B) <= 0");
    IntegralResult r = integrate(fp, w, B);
    return std::pair<double, bool>(std::pow(r.value / ub, 1.0 / p), r.domain_truncated);
  });
}

}  // namespace morrey
