#include "morrey/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "morrey/radial.hpp"

namespace morrey {

namespace {

constexpr double kLevelNudge = 1.0 - 1e-12;

bool origin_adjacent(const GridSpec& spec, std::int64_t cell) {
  int half = spec.m / 2;
  if (spec.n == 1) return cell == half - 1 || cell == half;
  int ix = static_cast<int>(cell % spec.m), iy = static_cast<int>(cell / spec.m);
  return (ix == half - 1 || ix == half) && (iy == half - 1 || iy == half);
}

double weight_scale(const Weight& w) { return w(Point{1.0, 0.0}); }

// \int_a^b coef |y|^e w(y)^{wq} dy on a 1D interval (may span 0)
double profile_interval_mass(const Weight& w, double wq, double coef, double e, double a, double b) {
  if (b <= a) return 0.0;
  if (w.is_power()) {
    double g = wq * w.power_exponent() + e;
    return coef * std::pow(weight_scale(w), wq) * power_interval_mass(g, a, b);
  }
  double mid = 0.5 * (a + b);
  if (mid == 0.0) mid = a + 0.75 * (b - a);
  double fval = e == 0.0 ? coef : coef * std::pow(std::fabs(mid), e);
  return fval * w.pow_segment_mass(wq, a, b);
}

// \int_cell coef |y|^e w dy for a full 2D cell
double profile_cell_mass_2d(const Weight& w, const GridSpec& spec, std::int64_t cell, double coef, double e) {
  if ((e != 0.0 || w.is_power()) && origin_adjacent(spec, cell)) {
    if (w.is_power())
      return coef * std::pow(weight_scale(w), 1.0) * 0.25 * power_square_mass(w.power_exponent() + e, spec.h());
    // sampled weight with a radial profile: midpoint fallback
  }
  Point mid = spec.midpoint(cell);
  double fval = e == 0.0 ? coef : coef * std::pow(mid.norm(), e);
  return fval * w.cell_mass(spec, cell);
}

struct Clip1D {
  double lo = 0.0, hi = 0.0;
  bool truncated = false;
  bool empty = false;
};

Clip1D clip_ball_1d(const GridSpec& spec, const Ball& B) {
  Clip1D c;
  double lo = B.center.x - B.radius, hi = B.center.x + B.radius;
  c.truncated = lo < -spec.R - spec.h() || hi > spec.R + spec.h();
  c.lo = std::max(lo, -spec.R);
  c.hi = std::min(hi, spec.R);
  c.empty = c.hi <= c.lo;
  return c;
}

// visit cells of a 2D grid whose midpoint lies in B; returns the truncation flag
template <class F>
bool for_each_cell_2d(const GridSpec& spec, const Ball& B, F&& fn) {
  double lo_x = B.center.x - B.radius, hi_x = B.center.x + B.radius;
  double lo_y = B.center.y - B.radius, hi_y = B.center.y + B.radius;
  bool truncated = lo_x < -spec.R - spec.h() || hi_x > spec.R + spec.h() ||
                   lo_y < -spec.R - spec.h() || hi_y > spec.R + spec.h();
  double r2 = B.radius * B.radius;
  int ix0 = spec.axis_index(lo_x), ix1 = spec.axis_index(hi_x);
  int iy0 = spec.axis_index(lo_y), iy1 = spec.axis_index(hi_y);
  for (int iy = iy0; iy <= iy1; ++iy) {
    double dy = spec.axis_midpoint(iy) - B.center.y;
    for (int ix = ix0; ix <= ix1; ++ix) {
      double dx = spec.axis_midpoint(ix) - B.center.x;
      if (dx * dx + dy * dy <= r2) fn(std::int64_t(iy) * spec.m + ix);
    }
  }
  return truncated;
}

}  // namespace

IntegralResult integrate(const GridFunction& f, const Weight& w, const Ball& B) {
  const GridSpec& spec = f.spec();
  IntegralResult res;
  const auto& tag = f.tag();

  if (spec.n == 1) {
    Clip1D clip = clip_ball_1d(spec, B);
    res.domain_truncated = clip.truncated;
    if (clip.empty) return res;
    double lo = clip.lo, hi = clip.hi;
    if (tag) {
      lo = std::max(lo, tag->center.x - tag->radius);
      hi = std::min(hi, tag->center.x + tag->radius);
      if (hi <= lo) return res;
    }
    const double h = spec.h();
    int i0 = spec.axis_index(lo + 1e-12 * h), i1 = spec.axis_index(hi - 1e-12 * h);
    double sum = 0.0;
    for (int i = i0; i <= i1; ++i) {
      double clo = -spec.R + i * h;
      double a = std::max(clo, lo), b = std::min(clo + h, hi);
      if (b <= a) continue;
      if (tag)
        sum += profile_interval_mass(w, 1.0, tag->coef, tag->exponent, a, b);
      else
        sum += f[i] * w.pow_segment_mass(1.0, a, b);
    }
    res.value = sum;
    return res;
  }

  double sum = 0.0;
  res.domain_truncated = for_each_cell_2d(spec, B, [&](std::int64_t cell) {
    if (tag) {
      if (!tag->covers(spec.midpoint(cell))) return;
      sum += profile_cell_mass_2d(w, spec, cell, tag->coef, tag->exponent);
    } else {
      double v = f[cell];
      if (v == 0.0) return;
      sum += v * w.cell_mass(spec, cell);
    }
  });
  res.value = sum;
  return res;
}

IntegralResult superlevel_mass(const GridFunction& f, const Weight& w, const Ball& B, double t) {
  const GridSpec& spec = f.spec();
  IntegralResult res;
  const auto& tag = f.tag();

  if (spec.n == 1) {
    Clip1D clip = clip_ball_1d(spec, B);
    res.domain_truncated = clip.truncated;
    if (clip.empty) return res;
    double lo = clip.lo, hi = clip.hi;
    if (tag) {
      lo = std::max(lo, tag->center.x - tag->radius);
      hi = std::min(hi, tag->center.x + tag->radius);
      if (hi <= lo) return res;
    }
    const double h = spec.h();
    int i0 = spec.axis_index(lo + 1e-12 * h), i1 = spec.axis_index(hi - 1e-12 * h);
    double sum = 0.0;
    for (int i = i0; i <= i1; ++i) {
      double clo = -spec.R + i * h;
      double a = std::max(clo, lo), b = std::min(clo + h, hi);
      if (b <= a) continue;
      if (!tag) {
        if (std::fabs(f[i]) > t) sum += w.pow_segment_mass(1.0, a, b);
        continue;
      }
      double coef = std::fabs(tag->coef), e = tag->exponent;
      if (e == 0.0) {
        if (coef > t) sum += w.pow_segment_mass(1.0, a, b);
      } else if (e < 0.0) {
        // coef |y|^e > t  <=>  |y| < rho
        double rho = std::pow(t / coef, 1.0 / e);
        sum += w.pow_segment_mass(1.0, std::max(a, -rho), std::min(b, rho));
      } else {
        double rho = std::pow(t / coef, 1.0 / e);
        sum += w.pow_segment_mass(1.0, a, std::min(b, -rho));
        sum += w.pow_segment_mass(1.0, std::max(a, rho), b);
      }
    }
    res.value = sum;
    return res;
  }

  double sum = 0.0;
  res.domain_truncated = for_each_cell_2d(spec, B, [&](std::int64_t cell) {
    Point mid = spec.midpoint(cell);
    if (!tag) {
      if (std::fabs(f[cell]) > t) sum += w.cell_mass(spec, cell);
      return;
    }
    if (!tag->covers(mid)) return;
    double coef = std::fabs(tag->coef), e = tag->exponent;
    if (e != 0.0 && origin_adjacent(spec, cell) && w.is_power()) {
      // quarter-annulus of the radial superlevel set, clipped to the cell's
      // inscribed radius; undercounts corners, keeping the estimate one-sided
      double rho = std::pow(t / coef, 1.0 / e);
      double r0 = e < 0.0 ? 0.0 : std::min(rho, spec.h());
      double r1 = e < 0.0 ? std::min(rho, spec.h()) : spec.h();
      if (r1 > r0) sum += 0.25 * power_annulus_mass(w.power_exponent(), r0, r1, 2);
      return;
    }
    double fv = e == 0.0 ? coef : coef * std::pow(mid.norm(), e);
    if (fv > t) sum += w.cell_mass(spec, cell);
  });
  res.value = sum;
  return res;
}

double lebesgue_norm(const GridFunction& f, const Weight& w, double q, double s) {
  const GridSpec& spec = f.spec();
  const auto& tag = f.tag();
  double sum = 0.0;
  if (spec.n == 1) {
    const double h = spec.h();
    for (int i = 0; i < spec.m; ++i) {
      double a = -spec.R + i * h, b = a + h;
      if (tag) {
        a = std::max(a, tag->center.x - tag->radius);
        b = std::min(b, tag->center.x + tag->radius);
        if (b <= a) continue;
        sum += profile_interval_mass(w, s, std::pow(std::fabs(tag->coef), q), tag->exponent * q, a, b);
      } else if (f[i] != 0.0) {
        sum += std::pow(std::fabs(f[i]), q) * w.pow_segment_mass(s, a, b);
      }
    }
  } else {
    for (std::int64_t c = 0; c < spec.cell_count(); ++c) {
      if (tag) {
        Point mid = spec.midpoint(c);
        if (!tag->covers(mid)) continue;
        if (origin_adjacent(spec, c) && w.is_power()) {
          double g = q * tag->exponent + s * w.power_exponent();
          sum += std::pow(std::fabs(tag->coef), q) * 0.25 * power_square_mass(g, spec.h());
        } else {
          double fv = std::pow(std::fabs(tag->eval(mid)), q);
          sum += fv * w.cell_mass(spec, c, s);
        }
      } else if (f[c] != 0.0) {
        sum += std::pow(std::fabs(f[c]), q) * w.cell_mass(spec, c, s);
      }
    }
  }
  return std::pow(sum, 1.0 / q);
}

std::vector<double> cell_masses(const GridFunction& f) {
  const GridSpec& spec = f.spec();
  const auto& tag = f.tag();
  std::vector<double> out(static_cast<std::size_t>(spec.cell_count()), 0.0);
  Weight one = Weight::constant(1.0, spec.n);
  if (spec.n == 1) {
    const double h = spec.h();
    for (int i = 0; i < spec.m; ++i) {
      double a = -spec.R + i * h, b = a + h;
      if (tag) {
        a = std::max(a, tag->center.x - tag->radius);
        b = std::min(b, tag->center.x + tag->radius);
        if (b <= a) continue;
        out[i] = tag->exponent == 0.0 ? tag->coef * (b - a)
                                      : tag->coef * power_interval_mass(tag->exponent, a, b);
      } else {
        out[i] = f[i] * h;
      }
    }
  } else {
    const double h2 = spec.h() * spec.h();
    for (std::int64_t c = 0; c < spec.cell_count(); ++c) {
      if (tag) {
        Point mid = spec.midpoint(c);
        if (!tag->covers(mid)) continue;
        if (tag->exponent != 0.0 && origin_adjacent(spec, c))
          out[static_cast<std::size_t>(c)] =
              tag->coef * 0.25 * power_square_mass(tag->exponent, spec.h());
        else
          out[static_cast<std::size_t>(c)] = tag->eval(mid) * h2;
      } else {
        out[static_cast<std::size_t>(c)] = f[c] * h2;
      }
    }
  }
  return out;
}

bool has_infinite_value(const GridFunction& f, const Ball& B) {
  const GridSpec& spec = f.spec();
  bool found = false;
  if (spec.n == 1) {
    Clip1D clip = clip_ball_1d(spec, B);
    if (clip.empty) return false;
    int i0 = spec.axis_index(clip.lo + 1e-12 * spec.h()), i1 = spec.axis_index(clip.hi - 1e-12 * spec.h());
    for (int i = i0; i <= i1; ++i)
      if (std::isinf(f[i])) return true;
    return false;
  }
  for_each_cell_2d(spec, B, [&](std::int64_t c) { found = found || std::isinf(f[c]); });
  return found;
}

bool touches_singularity(const GridFunction& f, const Ball& B) {
  const auto& tag = f.tag();
  if (!tag || !tag->singular()) return false;
  double d = B.center.norm();
  if (d - B.radius > f.spec().h()) return false;       // ball stays away from the origin cells
  return dist(B.center, tag->center) - B.radius <= tag->radius;  // and meets the support
}

std::vector<double> superlevel_levels(const GridFunction& f, const Ball& B, int ladder) {
  const GridSpec& spec = f.spec();
  const auto& tag = f.tag();
  std::set<double> vals;
  double prof_min = kInf, prof_max = 0.0;

  auto feed_profile = [&](double r_lo, double r_hi) {
    double e = tag->exponent, c = std::fabs(tag->coef);
    double v1 = r_lo > 0.0 ? c * std::pow(r_lo, e) : (e < 0.0 ? kInf : 0.0);
    double v2 = c * std::pow(r_hi, e);
    double lo = std::min(v1, v2), hi = std::max(v1, v2);
    if (std::isfinite(lo) && lo > 0.0) prof_min = std::min(prof_min, lo);
    if (std::isfinite(hi)) {
      prof_max = std::max(prof_max, hi);
      vals.insert(hi);
      if (lo > 0.0 && std::isfinite(lo)) vals.insert(lo);
    } else {
      // singular endpoint: cap the ladder at the profile value one cell-width
      // scale below the grid (anything above only matters for divergent cells)
      prof_max = std::max(prof_max, c * std::pow(std::ldexp(spec.h(), -40), e));
    }
  };

  if (spec.n == 1) {
    Clip1D clip = clip_ball_1d(spec, B);
    if (clip.empty) return {};
    double lo = clip.lo, hi = clip.hi;
    if (tag) {
      lo = std::max(lo, tag->center.x - tag->radius);
      hi = std::min(hi, tag->center.x + tag->radius);
      if (hi <= lo) return {};
      if (tag->exponent == 0.0) {
        vals.insert(std::fabs(tag->coef));
      } else {
        double r_lo = (lo <= 0.0 && hi >= 0.0) ? 0.0 : std::min(std::fabs(lo), std::fabs(hi));
        double r_hi = std::max(std::fabs(lo), std::fabs(hi));
        feed_profile(r_lo, r_hi);
      }
    } else {
      int i0 = spec.axis_index(lo + 1e-12 * spec.h()), i1 = spec.axis_index(hi - 1e-12 * spec.h());
      for (int i = i0; i <= i1; ++i)
        if (std::isfinite(f[i]) && f[i] != 0.0) vals.insert(std::fabs(f[i]));
    }
  } else {
    for_each_cell_2d(spec, B, [&](std::int64_t c) {
      Point mid = spec.midpoint(c);
      if (tag) {
        if (!tag->covers(mid)) return;
        if (tag->exponent == 0.0) {
          vals.insert(std::fabs(tag->coef));
        } else if (origin_adjacent(spec, c)) {
          feed_profile(0.0, spec.h());
        } else {
          double v = std::fabs(tag->eval(mid));
          if (v > 0.0) vals.insert(v);
        }
      } else if (std::isfinite(f[c]) && f[c] != 0.0) {
        vals.insert(std::fabs(f[c]));
      }
    });
  }

  std::vector<double> out;
  out.reserve(vals.size() + (tag && tag->exponent != 0.0 ? ladder : 0));
  for (double v : vals) out.push_back(v * kLevelNudge);
  if (tag && tag->exponent != 0.0 && prof_max > prof_min && prof_min > 0.0 &&
      std::isfinite(prof_min)) {
    double ratio = std::pow(prof_max / prof_min, 1.0 / ladder);
    double t = prof_min;
    for (int i = 0; i < ladder; ++i) {
      t *= ratio;
      out.push_back(t * kLevelNudge);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace morrey
