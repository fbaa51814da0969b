#ifndef MORREY_MAXIMAL_HPP
#define MORREY_MAXIMAL_HPP

#include <vector>

#include "morrey/grid.hpp"

namespace morrey {

/// Window lattice for the Hardy-Littlewood maximal operator.
/// 1D: uncentered intervals, `windows` holds dyadic lengths in cells.
/// 2D: centered squares, `windows` holds dyadic half-widths in cells
/// (0 = the single-cell window, always present).
/// The supremum over all radii exceeds the lattice version by at most the
/// ratio of consecutive dyadic averages, bounded by 2^n.
struct MaximalConfig {
  enum class Flavor { UncenteredInterval, CenteredSquare };
  Flavor flavor = Flavor::UncenteredInterval;
  std::vector<int> windows;

  static MaximalConfig dyadic(const GridSpec&);
  void validate(const GridSpec&) const;
};

/// Direct-summation reference: exact maximum over all lattice windows
/// containing each grid point of the window average of f.
GridFunction maximal_brute(const GridFunction& f, const MaximalConfig&);

/// Same output via prefix sums: per-length sliding-window maxima in 1D,
/// a summed-area table in 2D.
GridFunction maximal_fast(const GridFunction& f, const MaximalConfig&);

/// (Mh)^{1/s}; pointwise-maximal weights with h-independent A_1 constants.
GridFunction a1_from_maximal(const GridFunction& h, double s);

}  // namespace morrey

#endif
