#include "morrey/ranges.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace morrey {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_beta(const MorreyParams& params, double beta) {
  params.validate();
  if (!(beta > -params.n)) throw std::invalid_argument("beta must exceed -n");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded: return "bounded";
    case Verdict::Unbounded: return "unbounded";
    case Verdict::TrivialSpace: return "trivial-space";
    case Verdict::Boundary: return "boundary";
    case Verdict::OutsideTheory: return "outside-theory";
  }
  return "?";
}

void to_json(nlohmann::json& j, const RangeVerdict& v) {
  j = nlohmann::json{{"verdict", to_string(v.verdict)},
                     {"citation", v.citation},
                     {"binding_constraint", v.binding_constraint}};
  if (v.boundary_included) j["boundary_included"] = *v.boundary_included;
}

SpaceVerdict space_is_trivial(const MorreyParams& params, double beta) {
  require_beta(params, beta);
  const double n = params.n;
  double s = params.lambda1 + params.lambda2 * (1.0 + beta / n);
  double sum = params.lambda_sum();
  SpaceVerdict v;
  if (s < -kBoundaryTol) {
    v.trivial = true;
    v.binding_constraint = "lambda1 + lambda2(1+beta/n) = " + fmt(s) + " < 0";
    return v;
  }
  if (sum > n + kBoundaryTol) {
    v.trivial = true;
    v.binding_constraint = "lambda1 + lambda2 = " + fmt(sum) + " > n";
    return v;
  }
  if (near(sum, n)) {
    v.linfty_type = true;
    v.binding_constraint = "lambda1 + lambda2 = n (L-infinity-type space)";
    return v;
  }
  v.binding_constraint = "nontrivial";
  return v;
}

std::pair<MorreyParams, double> identify_space(const MorreyParams& params, double beta) {
  require_beta(params, beta);
  const double n = params.n;
  double s = params.lambda1 + params.lambda2 * (1.0 + beta / n);
  if (!(s > kBoundaryTol))
    throw std::invalid_argument("identify_space: lambda1 + lambda2(1+beta/n) > 0 fails (value " + fmt(s) + ")");
  double sum = params.lambda_sum();
  if (!(sum > kBoundaryTol))
    throw std::invalid_argument("identify_space: lambda1 + lambda2 > 0 fails (value " + fmt(sum) + ")");
  if (!(sum < n - kBoundaryTol))
    throw std::invalid_argument("identify_space: lambda1 + lambda2 < n fails (value " + fmt(sum) + ")");
  MorreyParams out{params.p, sum, 0.0, params.n};
  return {out, beta * (1.0 - params.lambda2 / n)};
}

double hl_necessity_class(const MorreyParams& params) {
  params.validate();
  if (params.lambda1 < 0.0 || params.lambda2 < 0.0)
    throw std::invalid_argument("hl_necessity_class: lambda1, lambda2 must be nonnegative");
  if (params.lambda2 >= params.n)
    throw std::invalid_argument("hl_necessity_class: lambda2 < n required");
  if (params.lambda_sum() >= params.n)
    throw std::invalid_argument("hl_necessity_class: lambda1 + lambda2 < n required");
  return (params.n * params.p + params.lambda1) / (params.n - params.lambda2);
}

PowerRange hl_power_range(const MorreyParams& params) {
  params.validate();
  const double n = params.n;
  const double sum = params.lambda_sum();
  if (sum > n + kBoundaryTol) throw std::invalid_argument("hl_power_range: lambda1 + lambda2 > n rejected");

  if (near(params.lambda2, n)) {
    if (!(params.lambda1 > -n * params.p + kBoundaryTol) || !(params.lambda1 < -kBoundaryTol))
      throw std::invalid_argument("hl_power_range: lambda2 = n requires -np < lambda1 < 0");
    return {-n - params.lambda1, kInf, false};
  }
  if (near(sum, n))
    throw std::invalid_argument("hl_power_range: lambda1 + lambda2 = n is the L-infinity-type boundary");

  const double factor = 1.0 - params.lambda2 / n;  // positive here
  double lo = (sum - n) / factor;
  double hi = (sum + n * (params.p - 1.0)) / factor;
  bool lo_closed = lo > -n + kBoundaryTol;
  if (lo <= -n) lo = -n;  // beta > -n anyway; endpoint open

  if (std::fabs(params.lambda2) <= kBoundaryTol) {
    if (params.lambda1 < -kBoundaryTol)
      throw std::invalid_argument("hl_power_range: lambda1 < 0 with lambda2 = 0 gives a trivial scale");
  } else {
    // stay inside the nontrivial-space range lambda1 + lambda2(1+beta/n) > 0
    double beta_b = -n * sum / params.lambda2;
    if (params.lambda2 > 0.0) {
      if (beta_b > lo - kBoundaryTol) {
        lo = std::max(lo, beta_b);
        lo_closed = false;
      }
    } else {
      hi = std::min(hi, beta_b);
    }
  }
  return {lo, hi, lo_closed};
}

RangeVerdict hl_power_verdict(const MorreyParams& params, double beta) {
  require_beta(params, beta);
  RangeVerdict out;
  out.citation = "power-range";

  SpaceVerdict sv = space_is_trivial(params, beta);
  if (sv.trivial) return {Verdict::TrivialSpace, "triviality", sv.binding_constraint, std::nullopt};
  if (sv.linfty_type) return {Verdict::OutsideTheory, "triviality", sv.binding_constraint, std::nullopt};

  if (near(params.lambda2, static_cast<double>(params.n))) {
    const double n = params.n;
    if (!(params.lambda1 > -n * params.p) || !(params.lambda1 < 0.0))
      return {Verdict::OutsideTheory, "power-range", "lambda2 = n requires -np < lambda1 < 0", std::nullopt};
    double t = -n - params.lambda1;
    if (near(beta, t)) {
      bool included = params.lambda1 > -n + kBoundaryTol;
      out.verdict = Verdict::Boundary;
      out.binding_constraint = included
          ? "beta = -n-lambda1 (included: unweighted-scale transfer plus Lebesgue boundedness)"
          : "beta = -n-lambda1";
      out.boundary_included = included ? std::optional<bool>(true) : std::nullopt;
      return out;
    }
    out.verdict = beta > t ? Verdict::Bounded : Verdict::Unbounded;
    out.binding_constraint = "beta vs -n-lambda1 = " + fmt(t);
    return out;
  }

  PowerRange r;
  try {
    r = hl_power_range(params);
  } catch (const std::invalid_argument& e) {
    return {Verdict::OutsideTheory, "power-range", e.what(), std::nullopt};
  }
  if (near(beta, r.beta_lo) && r.beta_lo > -params.n + kBoundaryTol) {
    out.verdict = Verdict::Boundary;
    out.boundary_included = r.lo_closed;
    out.binding_constraint = r.lo_closed ? "left endpoint (closed)" : "left endpoint (open)";
    return out;
  }
  if (std::isfinite(r.beta_hi) && near(beta, r.beta_hi)) {
    out.verdict = Verdict::Boundary;
    out.boundary_included = false;
    out.binding_constraint = "right endpoint (open)";
    return out;
  }
  if (beta < r.beta_lo) {
    out.verdict = Verdict::Unbounded;
    out.binding_constraint = "beta(1-lambda2/n) < lambda1+lambda2-n";
    return out;
  }
  if (beta >= r.beta_hi) {
    out.verdict = Verdict::Unbounded;
    out.binding_constraint = "beta(1-lambda2/n) >= lambda1+lambda2+n(p-1)";
    return out;
  }
  out.verdict = Verdict::Bounded;
  out.binding_constraint = "inside [" + fmt(r.beta_lo) + ", " + fmt(r.beta_hi) + ")";
  return out;
}

GeneralSufficiency hl_general_sufficient(const MorreyParams& params, double sigma_w, double theta) {
  params.validate();
  if (params.lambda2 < 0.0) throw std::invalid_argument("hl_general_sufficient: lambda2 >= 0 required");
  if (params.lambda2 > params.n + kBoundaryTol)
    throw std::invalid_argument("hl_general_sufficient: lambda2 <= n required");
  double sp = conjugate_exponent(sigma_w);
  double v = params.lambda1 * sp + params.lambda2;
  GeneralSufficiency out;
  out.admissible = v > kBoundaryTol && v < params.n - kBoundaryTol;
  if (params.lambda2 >= params.n - kBoundaryTol)
    out.alpha_hi = kInf;
  else
    out.alpha_hi = params.n * (params.lambda1 + params.lambda2 * theta) / (params.n - params.lambda2);
  return out;
}

bool ExtrapolationRegion::member(double l1, double l2, double alpha) const {
  for (const auto& c : constraints)
    if (!c.holds(l1, l2, alpha)) return false;
  return true;
}

std::string ExtrapolationRegion::first_violated(double l1, double l2, double alpha) const {
  for (const auto& c : constraints)
    if (!c.holds(l1, l2, alpha)) return c.description;
  return "";
}

ExtrapolationRegion extrapolation_region_full(double p, double sigma_w, double theta, int n) {
  if (!(p >= 1.0)) throw std::invalid_argument("extrapolation_region_full: p >= 1 required");
  const double sp = conjugate_exponent(sigma_w);
  const double nn = n;
  ExtrapolationRegion r;
  r.constraints.push_back({"0 <= lambda2 <= n", [nn](double, double l2, double) {
                             return l2 >= -kBoundaryTol && l2 <= nn + kBoundaryTol;
                           }});
  r.constraints.push_back({"0 < lambda1 sigma_w' + lambda2", [sp](double l1, double l2, double) {
                             return l1 * sp + l2 > kBoundaryTol;
                           }});
  r.constraints.push_back({"lambda1 sigma_w' + lambda2 < n", [sp, nn](double l1, double l2, double) {
                             return l1 * sp + l2 < nn - kBoundaryTol;
                           }});
  r.constraints.push_back({"0 <= alpha", [](double, double, double a) { return a >= -kBoundaryTol; }});
  r.constraints.push_back(
      {"lambda1 + lambda2 theta > 0 and alpha < n(lambda1+lambda2 theta)/(n-lambda2)",
       [theta, nn](double l1, double l2, double a) {
         double num = l1 + l2 * theta;
         if (!(num > kBoundaryTol)) return false;
         if (l2 >= nn - kBoundaryTol) return true;  // unbounded alpha range
         return a < nn * num / (nn - l2) - kBoundaryTol;
       }});
  return r;
}

bool extrapolation_region_power(double p, double beta, double lambda1, double lambda2, int n) {
  if (!(p >= 1.0)) throw std::invalid_argument("extrapolation_region_power: p >= 1 required");
  if (!(beta > -n)) throw std::invalid_argument("extrapolation_region_power: beta > -n required");
  double s = lambda1 + lambda2 * (1.0 + beta / n);
  double lo = std::max(0.0, beta - n * (p - 1.0));
  double hi = n + beta;
  return lambda1 + lambda2 < n - kBoundaryTol && s > lo + kBoundaryTol && s < hi - kBoundaryTol;
}

bool extrapolation_region_limited(double p, double p_minus, double p_plus, double sigma_w,
                                  double theta, double lambda1, double lambda2, double alpha, int n) {
  if (!(p_minus > 0.0) || !(p_minus <= p_plus))
    throw std::invalid_argument("extrapolation_region_limited: need 0 < p- <= p+");
  if (!(p > p_minus) || !(p < p_plus))
    throw std::invalid_argument("extrapolation_region_limited: p outside (p-, p+)");
  double sp = conjugate_exponent(sigma_w);
  double rh_floor = conjugate_exponent(p_plus / p);  // (p+/p)'
  if (!(sigma_w > rh_floor + kBoundaryTol || std::isinf(sigma_w))) return false;
  if (lambda2 < -kBoundaryTol || lambda2 > n + kBoundaryTol) return false;
  double v = lambda1 * sp + lambda2;
  if (!(v > kBoundaryTol)) return false;
  double cap = std::isinf(p_plus) ? static_cast<double>(n) : n * (1.0 - (p / p_plus) * sp);
  if (!(v < cap - kBoundaryTol)) return false;
  if (alpha < -kBoundaryTol) return false;
  double num = lambda1 + lambda2 * theta;
  if (!(num > kBoundaryTol)) return false;
  if (lambda2 >= n - kBoundaryTol) return true;
  return alpha < n * num / (n - lambda2) - kBoundaryTol;
}

std::pair<double, double> embedding_exponents(const MorreyParams& params) {
  params.validate();
  const double n = params.n;
  if (params.lambda1 < 0.0 || params.lambda2 < 0.0 || params.lambda1 >= n || params.lambda2 >= n)
    throw std::invalid_argument("embedding_exponents: 0 <= lambda1, lambda2 < n required");
  double sum = params.lambda_sum();
  if (!(sum < n - kBoundaryTol))
    throw std::invalid_argument("embedding_exponents: lambda1 + lambda2 < n required");
  return {params.p * n / (n - sum), (n - params.lambda2) / (n - sum)};
}

}  // namespace morrey
