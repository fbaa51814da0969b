#ifndef MORREY_RADIAL_HPP
#define MORREY_RADIAL_HPP

#include <vector>

namespace morrey {

// Closed-form integrals of |y|^g over radial sets. Divergent integrals
// (region touching the origin with g <= -n) come back as +inf so that
// parameter sweeps can keep going past divergent cells.

// \int_a^b t^g dt for 0 <= a <= b.
double power_segment(double g, double a, double b);

// \int_lo^hi |t|^g dt for an arbitrary interval (may span 0).
double power_interval_mass(double g, double lo, double hi);

// \int_{a<|y|<b} |y|^g dy in R^n, n in {1,2}, 0 <= a <= b.
double power_annulus_mass(double g, double a, double b, int n);

// \int_{|y|<r} |y|^g dy in R^n.
double power_ball_mass(double g, double r, int n);

// \int_{[-s,s]^2} |y|^g dy.  Reduces to 8 s^{g+2}/(g+2) * A(g) with
// A(g) = \int_0^{pi/4} cos(t)^{-(g+2)} dt evaluated by Gauss-Legendre.
double power_square_mass(double g, double s);

struct GaussRule {
  std::vector<double> nodes;    // on [-1,1]
  std::vector<double> weights;
};

// Legendre nodes/weights by Newton iteration on the recurrence.
GaussRule gauss_legendre(int npts);

}  // namespace morrey

#endif
