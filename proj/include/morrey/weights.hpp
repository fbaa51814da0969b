#ifndef MORREY_WEIGHTS_HPP
#define MORREY_WEIGHTS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morrey/geometry.hpp"
#include "morrey/grid.hpp"
#include "morrey/params.hpp"

namespace morrey {

/// Analytic metadata attached to a weight: Muckenhoupt memberships, the
/// supremal reverse Hoelder exponent sigma_w, and the dyadic ratio exponent
/// theta with w(B(0,r))/w(B(0,R)) <= c (r/R)^{n theta}.
struct WeightMeta {
  std::map<double, bool> ap_class;
  std::optional<double> sigma_w;
  std::optional<double> theta;
};

/// Evaluable nonnegative weight. Power weights |x|^beta (and |x|^alpha times a
/// power) integrate analytically over intervals, origin-centered balls and
/// annuli; sampled weights fall back to midpoint sums. All integrals over
/// regions touching the origin report divergence as +inf, never by throwing.
class Weight {
 public:
  static Weight constant(double value = 1.0, int n = 1);
  static Weight power(double beta, int n);                        // |x|^beta, beta > -n
  static Weight shifted_power(double alpha, double beta, int n);  // |x|^alpha |x|^beta, alpha >= 0
  static Weight sampled(GridFunction samples);

  int dim() const { return n_; }
  double operator()(const Point&) const;

  bool is_power() const { return kind_ != Kind::Sampled; }
  double power_exponent() const;                  // total exponent alpha+beta
  std::optional<double> alpha_shift() const;      // the |x|^alpha factor, if split
  double sigma_w() const;                         // sup{sigma : w in RH_sigma}
  std::optional<double> sigma_w_opt() const;
  double theta() const;                           // 1 + beta/n for power weights
  WeightMeta meta() const;

  Weight with_sigma_w(double) const;              // attach metadata to sampled weights
  Weight with_theta(double) const;

  // integral of w^q over sets; q = 1 gives the plain weight mass
  double ball_mass(const Ball&, const GridSpec&) const;
  double pow_ball_mass(const Ball&, double q, const GridSpec&) const;
  double pow_segment_mass(double q, double lo, double hi) const;  // 1D interval, may span 0
  double cell_mass(const GridSpec&, std::int64_t cell, double q = 1.0) const;

  /// Essential infimum over a ball: minimum of the grid samples combined with
  /// the analytic values at the radially nearest and farthest points of the
  /// ball (exact for monotone radial profiles).
  double essinf(const Ball&, const GridSpec&) const;

  std::string describe() const;

 private:
  enum class Kind { Constant, Power, Sampled };
  Kind kind_ = Kind::Constant;
  int n_ = 1;
  double scale_ = 1.0;     // constant value
  double alpha_ = 0.0;     // shift exponent
  double beta_ = 0.0;      // base exponent
  GridFunction samples_;
  WeightMeta meta_;

  double total_exponent() const { return alpha_ + beta_; }
};

/// E in the measure-comparison inequality: a sub-ball or an annulus.
struct Region {
  enum class Kind { BallRegion, Annulus };
  Kind kind = Kind::BallRegion;
  Point center{};
  double inner = 0.0;   // annulus only
  double outer = 1.0;   // radius for balls

  static Region ball(Point c, double r) { return {Kind::BallRegion, c, 0.0, r}; }
  static Region annulus(Point c, double a, double b) { return {Kind::Annulus, c, a, b}; }
  double measure(int n) const;
  bool contained_in(const Ball&) const;
};

double region_mass(const Weight&, const Region&, const GridSpec&);

// --- estimators (lower bounds computed over finite ball families) ---

/// Exact membership |x|^beta in A_p: p = 1 and -n < beta <= 0, or
/// p > 1 and -n < beta < n(p-1).
bool ap_membership_power(double beta, double p, int n);

/// max over the family of (w(B)/|B|) (w^{1-p'}(B)/|B|)^{p-1}; +inf verdict
/// when the dual-exponent mass diverges.
double ap_constant_estimate(const Weight&, double p, std::span<const Ball>, const GridSpec&);

/// max over the family of (w(B)/|B|) / essinf_B w; +inf when essinf is 0.
double a1_constant_estimate(const Weight&, std::span<const Ball>, const GridSpec&);

/// sup{sigma : |x|^beta in RH_sigma}: +inf for beta >= 0, -n/beta otherwise.
double sigma_w_power(double beta, int n);

/// max over the family of (avg_B w^sigma)^{1/sigma} / avg_B w.
double rh_check(const Weight&, double sigma, std::span<const Ball>, const GridSpec&);

/// max over pairs E subset B of [w(E)/w(B)] / (|E|/|B|)^{1/sigma'}.
double measure_comparison_defect(const Weight&, double sigma,
                                 std::span<const std::pair<Region, Ball>>, const GridSpec&);

/// Dyadic mass-ratio exponent of |x|^beta: theta = 1 + beta/n.
double theta_power(double beta, int n);

}  // namespace morrey

#endif
