#include "morrey/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "morrey/integrate.hpp"

namespace morrey {

namespace {

void require_nonnegative(const GridFunction& f) {
  if (!f.nonnegative()) throw std::invalid_argument("maximal operator: input must be nonnegative");
}

// A divergent cell mass makes every average over a window containing that
// cell infinite; the lattice always contains a domain-covering window, so the
// output is identically +inf.
bool any_infinite(const std::vector<double>& masses) {
  for (double m : masses)
    if (std::isinf(m)) return true;
  return false;
}

GridFunction all_inf(const GridSpec& spec) {
  GridFunction g(spec, kInf);
  return g;
}

}  // namespace

MaximalConfig MaximalConfig::dyadic(const GridSpec& spec) {
  MaximalConfig cfg;
  cfg.flavor = spec.n == 1 ? Flavor::UncenteredInterval : Flavor::CenteredSquare;
  if (spec.n == 1) {
    for (int len = 1; len <= spec.m; len *= 2) cfg.windows.push_back(len);
  } else {
    cfg.windows.push_back(0);
    for (int d = 1; d <= spec.m; d *= 2) cfg.windows.push_back(d);
  }
  return cfg;
}

void MaximalConfig::validate(const GridSpec& spec) const {
  if (windows.empty()) throw std::invalid_argument("maximal config: empty window set");
  int single = spec.n == 1 ? 1 : 0;
  if (std::find(windows.begin(), windows.end(), single) == windows.end())
    throw std::invalid_argument("maximal config: window set must include the single-cell window");
  if (spec.n == 1 && flavor != Flavor::UncenteredInterval)
    throw std::invalid_argument("maximal config: 1D uses uncentered intervals");
  if (spec.n == 2 && flavor != Flavor::CenteredSquare)
    throw std::invalid_argument("maximal config: 2D uses centered squares");
}

GridFunction maximal_brute(const GridFunction& f, const MaximalConfig& cfg) {
  require_nonnegative(f);
  const GridSpec& spec = f.spec();
  cfg.validate(spec);
  std::vector<double> mass = cell_masses(f);
  if (any_infinite(mass)) return all_inf(spec);
  const double h = spec.h();
  GridFunction out(spec, 0.0);

  if (spec.n == 1) {
    for (int len : cfg.windows) {
      if (len > spec.m) continue;
      double denom = len * h;
      for (int a = 0; a + len <= spec.m; ++a) {
        double s = 0.0;
        for (int j = a; j < a + len; ++j) s += mass[j];
        double avg = s / denom;
        for (int i = a; i < a + len; ++i) out[i] = std::max(out[i], avg);
      }
    }
    return out;
  }

  const int m = spec.m;
  for (int d : cfg.windows) {
    double denom = (2.0 * d + 1.0) * h;
    denom *= denom;
    for (int iy = 0; iy < m; ++iy)
      for (int ix = 0; ix < m; ++ix) {
        double s = 0.0;
        for (int y = std::max(0, iy - d); y <= std::min(m - 1, iy + d); ++y)
          for (int x = std::max(0, ix - d); x <= std::min(m - 1, ix + d); ++x)
            s += mass[std::size_t(y) * m + x];
        std::int64_t idx = std::int64_t(iy) * m + ix;
        out[idx] = std::max(out[idx], s / denom);
      }
  }
  return out;
}

GridFunction maximal_fast(const GridFunction& f, const MaximalConfig& cfg) {
  require_nonnegative(f);
  const GridSpec& spec = f.spec();
  cfg.validate(spec);
  std::vector<double> mass = cell_masses(f);
  if (any_infinite(mass)) return all_inf(spec);
  const double h = spec.h();
  GridFunction out(spec, 0.0);

  if (spec.n == 1) {
    const int m = spec.m;
    std::vector<double> prefix(m + 1, 0.0);
    for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + mass[i];
    for (int len : cfg.windows) {
      if (len > m) continue;
      const int placements = m - len + 1;
      const double denom = len * h;
      // out[i] needs max over window starts a in [i-len+1, i] of the window sum
      std::deque<int> deq;
      for (int i = 0; i < m; ++i) {
        if (i < placements) {
          double s = prefix[i + len] - prefix[i];
          while (!deq.empty() && prefix[deq.back() + len] - prefix[deq.back()] <= s) deq.pop_back();
          deq.push_back(i);
        }
        while (deq.front() < i - len + 1) deq.pop_front();
        double best = prefix[deq.front() + len] - prefix[deq.front()];
        out[i] = std::max(out[i], best / denom);
      }
    }
    return out;
  }

  const int m = spec.m;
  std::vector<double> sat(std::size_t(m + 1) * (m + 1), 0.0);
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x)
      sat[std::size_t(y + 1) * (m + 1) + (x + 1)] = mass[std::size_t(y) * m + x] +
                                                    sat[std::size_t(y) * (m + 1) + (x + 1)] +
                                                    sat[std::size_t(y + 1) * (m + 1) + x] -
                                                    sat[std::size_t(y) * (m + 1) + x];
  auto box = [&](int x0, int x1, int y0, int y1) {  // inclusive cell ranges, clipped
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, m - 1);
    y1 = std::min(y1, m - 1);
    if (x1 < x0 || y1 < y0) return 0.0;
    return sat[std::size_t(y1 + 1) * (m + 1) + (x1 + 1)] - sat[std::size_t(y0) * (m + 1) + (x1 + 1)] -
           sat[std::size_t(y1 + 1) * (m + 1) + x0] + sat[std::size_t(y0) * (m + 1) + x0];
  };
  for (int d : cfg.windows) {
    double denom = (2.0 * d + 1.0) * h;
    denom *= denom;
    for (int iy = 0; iy < m; ++iy)
      for (int ix = 0; ix < m; ++ix) {
        std::int64_t idx = std::int64_t(iy) * m + ix;
        out[idx] = std::max(out[idx], box(ix - d, ix + d, iy - d, iy + d) / denom);
      }
  }
  return out;
}

GridFunction a1_from_maximal(const GridFunction& h, double s) {
  if (!(s > 1.0)) throw std::invalid_argument("a1_from_maximal: s > 1 required");
  require_nonnegative(h);
  if (h.max_abs() == 0.0) throw std::invalid_argument("a1_from_maximal: input is identically zero");
  GridFunction m = maximal_fast(h, MaximalConfig::dyadic(h.spec()));
  GridFunction out(h.spec());
  for (std::int64_t i = 0; i < h.spec().cell_count(); ++i) out[i] = std::pow(m[i], 1.0 / s);
  return out;
}

}  // namespace morrey
