#ifndef MORREY_INTEGRATE_HPP
#define MORREY_INTEGRATE_HPP

#include <vector>

#include "morrey/geometry.hpp"
#include "morrey/grid.hpp"
#include "morrey/weights.hpp"

namespace morrey {

struct IntegralResult {
  double value = 0.0;
  bool domain_truncated = false;  // ball escaped the domain cube by more than h
};

/// \int_B f w. Midpoint-rule cell sums with three exact fast paths: 1D cells
/// are clipped to B (and to the support of an analytic tag), power weights
/// integrate in closed form on every 1D piece, and singular tagged cells at
/// the origin carry their radial integral (+inf when it diverges).
/// Callers integrate |f|^p by passing f.abs_pow(p).
IntegralResult integrate(const GridFunction& f, const Weight& w, const Ball& B);

/// w({y in B : |f(y)| > t}); same cell semantics as integrate, so the
/// Chebyshev-type inequality t^p w({|f|>t} cap B) <= int_B |f|^p w holds
/// exactly on the computed quantities.
IntegralResult superlevel_mass(const GridFunction& f, const Weight& w, const Ball& B, double t);

/// ( \int |f|^q w^s )^{1/q} over the whole domain.
double lebesgue_norm(const GridFunction& f, const Weight& w, double q, double s);

/// Per-cell integrals of f over full cells (tag-aware); the input to the
/// maximal-operator kernels. A divergent singular cell contributes +inf.
std::vector<double> cell_masses(const GridFunction& f);

bool has_infinite_value(const GridFunction& f, const Ball& B);

/// True when f carries a singular tag and B reaches the cells where the
/// profile touches the origin.
bool touches_singularity(const GridFunction& f, const Ball& B);

/// Threshold ladder for the weak functional on one ball: the distinct finite
/// values of |f| in B nudged below themselves, plus a geometric refinement
/// across the range of an analytic radial profile.
std::vector<double> superlevel_levels(const GridFunction& f, const Ball& B, int ladder = 48);

}  // namespace morrey

#endif
