#include "morrey/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "morrey/radial.hpp"

namespace morrey {

namespace {

double pow_or_inf(double base, double expo) {
  if (base == 0.0) {
    if (expo > 0.0) return 0.0;
    if (expo == 0.0) return 1.0;
    return kInf;
  }
  return std::pow(base, expo);
}

// true for the cells whose closure touches the origin (origin sits on a cell
// corner, so there are 2^n of them)
bool origin_adjacent(const GridSpec& spec, std::int64_t cell) {
  int half = spec.m / 2;
  if (spec.n == 1) return cell == half - 1 || cell == half;
  int ix = static_cast<int>(cell % spec.m), iy = static_cast<int>(cell / spec.m);
  return (ix == half - 1 || ix == half) && (iy == half - 1 || iy == half);
}

}  // namespace

Weight Weight::constant(double value, int n) {
  if (!(value > 0.0)) throw std::invalid_argument("constant weight must be positive");
  Weight w;
  w.kind_ = Kind::Constant;
  w.n_ = n;
  w.scale_ = value;
  return w;
}

Weight Weight::power(double beta, int n) {
  if (!(beta > -n)) throw std::invalid_argument("power weight requires beta > -n");
  Weight w;
  w.kind_ = Kind::Power;
  w.n_ = n;
  w.beta_ = beta;
  return w;
}

Weight Weight::shifted_power(double alpha, double beta, int n) {
  if (alpha < 0.0) throw std::invalid_argument("shift exponent alpha must be >= 0");
  Weight w = power(beta, n);  // validates beta > -n
  w.alpha_ = alpha;
  return w;
}

Weight Weight::sampled(GridFunction samples) {
  Weight w;
  w.kind_ = Kind::Sampled;
  w.n_ = samples.spec().n;
  w.samples_ = std::move(samples);
  return w;
}

double Weight::operator()(const Point& p) const {
  switch (kind_) {
    case Kind::Constant: return scale_;
    case Kind::Power: return pow_or_inf(p.norm(), total_exponent());
    case Kind::Sampled: return samples_.eval(p);
  }
  return 0.0;
}

double Weight::power_exponent() const {
  if (kind_ == Kind::Sampled) throw std::logic_error("sampled weight has no power exponent");
  return kind_ == Kind::Constant ? 0.0 : total_exponent();
}

std::optional<double> Weight::alpha_shift() const {
  if (kind_ == Kind::Power && alpha_ != 0.0) return alpha_;
  return std::nullopt;
}

std::optional<double> Weight::sigma_w_opt() const {
  if (meta_.sigma_w) return meta_.sigma_w;
  if (kind_ == Kind::Constant) return kInf;
  if (kind_ == Kind::Power) return sigma_w_power(total_exponent(), n_);
  return std::nullopt;
}

double Weight::sigma_w() const {
  auto s = sigma_w_opt();
  if (!s) throw std::logic_error("weight carries no sigma_w metadata");
  return *s;
}

double Weight::theta() const {
  if (meta_.theta) return *meta_.theta;
  if (kind_ == Kind::Constant) return 1.0;
  if (kind_ == Kind::Power) return theta_power(total_exponent(), n_);
  throw std::logic_error("weight carries no theta metadata");
}

WeightMeta Weight::meta() const {
  WeightMeta m = meta_;
  if (!m.sigma_w) m.sigma_w = sigma_w_opt();
  if (!m.theta && kind_ != Kind::Sampled) m.theta = theta();
  return m;
}

Weight Weight::with_sigma_w(double s) const {
  Weight w = *this;
  w.meta_.sigma_w = s;
  return w;
}

Weight Weight::with_theta(double t) const {
  Weight w = *this;
  w.meta_.theta = t;
  return w;
}

double Weight::pow_segment_mass(double q, double lo, double hi) const {
  if (hi <= lo) return 0.0;
  switch (kind_) {
    case Kind::Constant:
      return std::pow(scale_, q) * (hi - lo);
    case Kind::Power:
      return power_interval_mass(q * total_exponent(), lo, hi);
    case Kind::Sampled: {
      const GridSpec& spec = samples_.spec();
      double a = std::max(lo, -spec.R), b = std::min(hi, spec.R);
      if (b <= a) return 0.0;
      double h = spec.h(), sum = 0.0;
      int i0 = spec.axis_index(a + 1e-15 * h), i1 = spec.axis_index(b - 1e-15 * h);
      for (int i = i0; i <= i1; ++i) {
        double clo = -spec.R + i * h, chi = clo + h;
        double piece = std::min(chi, b) - std::max(clo, a);
        if (piece > 0.0) sum += std::pow(samples_[i], q) * piece;
      }
      return sum;
    }
  }
  return 0.0;
}

double Weight::cell_mass(const GridSpec& spec, std::int64_t cell, double q) const {
  const double h = spec.h();
  if (spec.n == 1) {
    double lo = -spec.R + cell * h;
    return pow_segment_mass(q, lo, lo + h);
  }
  if (kind_ == Kind::Power && origin_adjacent(spec, cell))
    return 0.25 * power_square_mass(q * total_exponent(), h);
  Point mid = spec.midpoint(cell);
  double v = kind_ == Kind::Sampled ? samples_[cell] : (*this)(mid);
  return std::pow(v, q) * h * h;
}

double Weight::pow_ball_mass(const Ball& B, double q, const GridSpec& spec) const {
  if (n_ == 1 || spec.n == 1)
    return pow_segment_mass(q, B.center.x - B.radius, B.center.x + B.radius);

  if (kind_ == Kind::Constant) return std::pow(scale_, q) * B.measure(2);
  if (kind_ == Kind::Power && B.center.norm() == 0.0)
    return power_ball_mass(q * total_exponent(), B.radius, 2);

  // off-origin disk: midpoint sum over covered cells, analytic on the cells
  // touching the origin
  double r2 = B.radius * B.radius;
  int ix0 = spec.axis_index(B.center.x - B.radius), ix1 = spec.axis_index(B.center.x + B.radius);
  int iy0 = spec.axis_index(B.center.y - B.radius), iy1 = spec.axis_index(B.center.y + B.radius);
  double sum = 0.0;
  bool any = false;
  for (int iy = iy0; iy <= iy1; ++iy) {
    double my = spec.axis_midpoint(iy);
    for (int ix = ix0; ix <= ix1; ++ix) {
      double mx = spec.axis_midpoint(ix);
      double dx = mx - B.center.x, dy = my - B.center.y;
      if (dx * dx + dy * dy > r2) continue;
      any = true;
      sum += cell_mass(spec, std::int64_t(iy) * spec.m + ix, q);
    }
  }
  if (!any) {
    double v = (*this)(B.center);
    return std::pow(v, q) * B.measure(2);  // sub-cell ball
  }
  return sum;
}

double Weight::ball_mass(const Ball& B, const GridSpec& spec) const {
  return pow_ball_mass(B, 1.0, spec);
}

double Weight::essinf(const Ball& B, const GridSpec&) const {
  double inf = kInf;
  if (kind_ == Kind::Constant) return scale_;
  if (kind_ == Kind::Power) {
    double c = B.center.norm();
    double d0 = std::max(c - B.radius, 0.0), d1 = c + B.radius;
    inf = std::min(pow_or_inf(d0, total_exponent()), pow_or_inf(d1, total_exponent()));
  }
  const GridFunction* samples = kind_ == Kind::Sampled ? &samples_ : nullptr;
  if (samples) {
    const GridSpec& s = samples->spec();
    bool any = false;
    if (s.n == 1) {
      int i0 = s.axis_index(B.center.x - B.radius), i1 = s.axis_index(B.center.x + B.radius);
      for (int i = i0; i <= i1; ++i) {
        double mid = s.axis_midpoint(i);
        if (std::fabs(mid - B.center.x) <= B.radius) {
          inf = std::min(inf, (*samples)[i]);
          any = true;
        }
      }
    } else {
      double r2 = B.radius * B.radius;
      int ix0 = s.axis_index(B.center.x - B.radius), ix1 = s.axis_index(B.center.x + B.radius);
      int iy0 = s.axis_index(B.center.y - B.radius), iy1 = s.axis_index(B.center.y + B.radius);
      for (int iy = iy0; iy <= iy1; ++iy)
        for (int ix = ix0; ix <= ix1; ++ix) {
          double dx = s.axis_midpoint(ix) - B.center.x, dy = s.axis_midpoint(iy) - B.center.y;
          if (dx * dx + dy * dy <= r2) {
            inf = std::min(inf, (*samples)[std::int64_t(iy) * s.m + ix]);
            any = true;
          }
        }
    }
    if (!any) inf = samples->eval(B.center);
  }
  return inf;
}

std::string Weight::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant: os << scale_; break;
    case Kind::Power:
      if (alpha_ != 0.0) os << "|x|^" << alpha_ << " * ";
      os << "|x|^" << beta_;
      break;
    case Kind::Sampled: os << "sampled"; break;
  }
  return os.str();
}

double Region::measure(int n) const {
  if (kind == Kind::BallRegion) return unit_ball_measure(n) * (n == 1 ? outer : outer * outer);
  return n == 1 ? 2.0 * (outer - inner) : M_PI * (outer * outer - inner * inner);
}

bool Region::contained_in(const Ball& B) const {
  double d = dist(center, B.center);
  return d + outer <= B.radius + kBoundaryTol;
}

double region_mass(const Weight& w, const Region& E, const GridSpec& spec) {
  if (E.kind == Region::Kind::BallRegion) return w.ball_mass({E.center, E.outer}, spec);
  if (spec.n == 1) {
    double c = E.center.x;
    return w.pow_segment_mass(1.0, c - E.outer, c - E.inner) +
           w.pow_segment_mass(1.0, c + E.inner, c + E.outer);
  }
  if (w.is_power() && E.center.norm() == 0.0)
    return power_annulus_mass(w.power_exponent(), E.inner, E.outer, 2);
  double sum = 0.0;
  double a2 = E.inner * E.inner, b2 = E.outer * E.outer;
  int ix0 = spec.axis_index(E.center.x - E.outer), ix1 = spec.axis_index(E.center.x + E.outer);
  int iy0 = spec.axis_index(E.center.y - E.outer), iy1 = spec.axis_index(E.center.y + E.outer);
  for (int iy = iy0; iy <= iy1; ++iy)
    for (int ix = ix0; ix <= ix1; ++ix) {
      double dx = spec.axis_midpoint(ix) - E.center.x, dy = spec.axis_midpoint(iy) - E.center.y;
      double d2 = dx * dx + dy * dy;
      if (d2 > a2 && d2 <= b2) sum += w.cell_mass(spec, std::int64_t(iy) * spec.m + ix);
    }
  return sum;
}

bool ap_membership_power(double beta, double p, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("dimension must be 1 or 2");
  if (p < 1.0) throw std::invalid_argument("ap_membership_power: p must be >= 1");
  if (p == 1.0) return beta > -n && beta <= 0.0;
  return beta > -n && beta < n * (p - 1.0);
}

double ap_constant_estimate(const Weight& w, double p, std::span<const Ball> balls, const GridSpec& spec) {
  if (!(p > 1.0)) throw std::invalid_argument("ap_constant_estimate: p must be > 1");
  if (balls.empty()) throw std::invalid_argument("ap_constant_estimate: empty ball family");
  double pp = conjugate_exponent(p);
  double best = 0.0;
  for (const Ball& B : balls) {
    double vol = B.measure(spec.n);
    double avg = w.ball_mass(B, spec) / vol;
    double dual = w.pow_ball_mass(B, 1.0 - pp, spec) / vol;
    double v = avg * std::pow(dual, p - 1.0);
    if (!std::isfinite(v)) return kInf;
    best = std::max(best, v);
  }
  return best;
}

double a1_constant_estimate(const Weight& w, std::span<const Ball> balls, const GridSpec& spec) {
  if (balls.empty()) throw std::invalid_argument("a1_constant_estimate: empty ball family");
  double best = 0.0;
  for (const Ball& B : balls) {
    double avg = w.ball_mass(B, spec) / B.measure(spec.n);
    double inf = w.essinf(B, spec);
    if (!(inf > 0.0) || !std::isfinite(avg)) return kInf;
    best = std::max(best, avg / inf);
  }
  return best;
}

double sigma_w_power(double beta, int n) {
  if (!(beta > -n)) throw std::invalid_argument("sigma_w_power: beta must exceed -n");
  if (beta >= 0.0) return kInf;
  return -static_cast<double>(n) / beta;
}

double rh_check(const Weight& w, double sigma, std::span<const Ball> balls, const GridSpec& spec) {
  if (!(sigma > 1.0)) throw std::invalid_argument("rh_check: sigma must exceed 1");
  if (balls.empty()) throw std::invalid_argument("rh_check: empty ball family");
  double best = 0.0;
  for (const Ball& B : balls) {
    double vol = B.measure(spec.n);
    double lhs = std::pow(w.pow_ball_mass(B, sigma, spec) / vol, 1.0 / sigma);
    double rhs = w.ball_mass(B, spec) / vol;
    double v = lhs / rhs;
    if (!std::isfinite(v)) return kInf;
    best = std::max(best, v);
  }
  return best;
}

double measure_comparison_defect(const Weight& w, double sigma,
                                 std::span<const std::pair<Region, Ball>> pairs, const GridSpec& spec) {
  if (pairs.empty()) throw std::invalid_argument("measure_comparison_defect: no pairs");
  double sp = conjugate_exponent(sigma);
  double best = 0.0;
  for (const auto& [E, B] : pairs) {
    if (!E.contained_in(B)) throw std::invalid_argument("measure_comparison_defect: E not contained in B");
    double wr = region_mass(w, E, spec) / w.ball_mass(B, spec);
    double mr = std::pow(E.measure(spec.n) / B.measure(spec.n), 1.0 / sp);
    double v = wr / mr;
    if (!std::isfinite(v)) return kInf;
    best = std::max(best, v);
  }
  return best;
}

double theta_power(double beta, int n) {
  if (!(beta > -n)) throw std::invalid_argument("theta_power: beta must exceed -n");
  return 1.0 + beta / n;
}

}  // namespace morrey
