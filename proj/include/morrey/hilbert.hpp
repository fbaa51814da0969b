#ifndef MORREY_HILBERT_HPP
#define MORREY_HILBERT_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "morrey/geometry.hpp"
#include "morrey/grid.hpp"
#include "morrey/norms.hpp"

namespace morrey {

/// Truncation window for the singular kernel: inner cutoff epsilon defaults
/// to the grid spacing, outer cutoff to the domain radius.
struct TruncationSpec {
  double epsilon = 0.0;
  double outer = 0.0;

  static TruncationSpec for_grid(const GridSpec& spec) { return {spec.h(), spec.R}; }
  void validate() const;
};

/// Truncated Hilbert transform on the grid (1D only):
///   (Hf)(x) = sum_{eps < |x-y| <= outer} f(y)/(x-y) h.
/// The antisymmetric kernel cancels over symmetric cells, which approximates
/// the principal value.
GridFunction hilbert_truncated(const GridFunction& f, const TruncationSpec&);

/// max over the catalog of morrey_norm(|op f|)/morrey_norm(f); zero-norm
/// inputs are skipped with a warning.
double operator_norm_lower_bound(const std::function<GridFunction(const GridFunction&)>& op,
                                 const Weight& w, const MorreyParams&, std::span<const Ball>,
                                 std::span<const GridFunction> catalog,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace morrey

#endif
