#ifndef MORREY_PARAMS_HPP
#define MORREY_PARAMS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace morrey {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerance band used when an inequality is evaluated against its endpoint.
// Float equality on endpoints is meaningless; anything inside the band is
// classified "boundary" instead of being silently bucketed.
inline constexpr double kBoundaryTol = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
};

inline Point operator*(double c, const Point& p) { return {c * p.x, c * p.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }

/// Exponent triple (p, lambda1, lambda2) plus dimension.
struct MorreyParams {
  double p = 1.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  int n = 1;

  double lambda_sum() const { return lambda1 + lambda2; }

  void validate() const {
    if (n != 1 && n != 2) throw std::invalid_argument("dimension must be 1 or 2");
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  }
};

// q' = q/(q-1) with the conventions 1' = inf and inf' = 1.
inline double conjugate_exponent(double q) {
  if (std::isinf(q)) return 1.0;
  if (q <= 1.0) return kInf;
  return q / (q - 1.0);
}

inline bool near(double a, double b, double tol = kBoundaryTol) {
  return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

// Lebesgue measure of the unit ball: 2 in 1D, pi in 2D.
inline double unit_ball_measure(int n) { return n == 1 ? 2.0 : M_PI; }

}  // namespace morrey

#endif
