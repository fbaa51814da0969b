#include "morrey/radial.hpp"

#include <cmath>
#include <stdexcept>

#include "morrey/params.hpp"

namespace morrey {

namespace {

// Antiderivative of t^g on (0,inf): t^{g+1}/(g+1), or log t at g = -1.
double primitive(double g, double t) {
  if (t == 0.0) return 0.0;  // only reached when g+1 > 0
  if (g == -1.0) return std::log(t);
  return std::pow(t, g + 1.0) / (g + 1.0);
}

}  // namespace

double power_segment(double g, double a, double b) {
  if (b < a) return 0.0;
  if (a < 0.0) throw std::invalid_argument("power_segment: negative endpoint");
  if (a == b) return 0.0;
  if (a == 0.0) {
    if (g <= -1.0) return kInf;
    return primitive(g, b);
  }
  return primitive(g, b) - primitive(g, a);
}

double power_interval_mass(double g, double lo, double hi) {
  if (hi <= lo) return 0.0;
  if (lo >= 0.0) return power_segment(g, lo, hi);
  if (hi <= 0.0) return power_segment(g, -hi, -lo);
  return power_segment(g, 0.0, -lo) + power_segment(g, 0.0, hi);
}

double power_annulus_mass(double g, double a, double b, int n) {
  if (b <= a) return 0.0;
  if (n == 1) return 2.0 * power_segment(g, a, b);
  // surface measure of S^1 is 2 pi; radial Jacobian t
  return 2.0 * M_PI * power_segment(g + 1.0, a, b);
}

double power_ball_mass(double g, double r, int n) {
  return power_annulus_mass(g, 0.0, r, n);
}

GaussRule gauss_legendre(int npts) {
  GaussRule rule;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= npts; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = npts * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double power_square_mass(double g, double s) {
  if (s <= 0.0) return 0.0;
  if (g <= -2.0) return kInf;
  static const GaussRule rule = gauss_legendre(24);
  // A(g) = int_0^{pi/4} cos(t)^{-(g+2)} dt; integrand smooth, cos >= sqrt(2)/2
  const double half = M_PI / 8.0;
  double angular = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double t = half * (rule.nodes[i] + 1.0);
    angular += rule.weights[i] * std::pow(std::cos(t), -(g + 2.0));
  }
  angular *= half;
  return 8.0 * std::pow(s, g + 2.0) / (g + 2.0) * angular;
}

}  // namespace morrey
