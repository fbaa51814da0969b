#include "morrey/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace morrey {

void TruncationSpec::validate() const {
  if (!(epsilon > 0.0) || !(epsilon <= outer))
    throw std::invalid_argument("truncation: 0 < epsilon <= outer required");
}

GridFunction hilbert_truncated(const GridFunction& f, const TruncationSpec& trunc) {
  const GridSpec& spec = f.spec();
  if (spec.n != 1) throw std::invalid_argument("hilbert_truncated: 1D only");
  trunc.validate();
  const int m = spec.m;
  const double h = spec.h();
  // midpoint separations are exact multiples of h
  const int dmin = static_cast<int>(std::floor(trunc.epsilon / h)) + 1;
  const int dmax = static_cast<int>(std::floor(trunc.outer / h));
  GridFunction out(spec, 0.0);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int d = dmin; d <= dmax; ++d) {
      if (i - d >= 0) acc += f[i - d] / (d * h);
      if (i + d < m) acc -= f[i + d] / (d * h);
    }
    out[i] = acc * h;
  }
  return out;
}

double operator_norm_lower_bound(const std::function<GridFunction(const GridFunction&)>& op,
                                 const Weight& w, const MorreyParams& params,
                                 std::span<const Ball> balls, std::span<const GridFunction> catalog,
                                 std::vector<std::string>* warnings) {
  if (catalog.empty()) throw std::invalid_argument("operator_norm_lower_bound: empty catalog");
  double best = 0.0;
  int idx = 0;
  for (const GridFunction& f : catalog) {
    ++idx;
    NormEstimate in = morrey_norm(f, w, params, balls);
    if (!(in.value > 0.0) || !std::isfinite(in.value)) {
      if (warnings)
        warnings->push_back("catalog entry " + std::to_string(idx) + " skipped (norm " +
                            std::to_string(in.value) + ")");
      continue;
    }
    GridFunction g = op(f).abs_pow(1.0);
    NormEstimate out = morrey_norm(g, w, params, balls);
    best = std::max(best, out.value / in.value);
  }
  return best;
}

}  // namespace morrey
