#ifndef MORREY_RANGES_HPP
#define MORREY_RANGES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "morrey/params.hpp"

namespace morrey {

enum class Verdict { Bounded, Unbounded, TrivialSpace, Boundary, OutsideTheory };

std::string to_string(Verdict);

/// Outcome of an analytic range predicate. Every inequality is evaluated in
/// double precision with a 1e-12 band mapped to "boundary"; the binding
/// constraint is always named.
struct RangeVerdict {
  Verdict verdict = Verdict::OutsideTheory;
  std::string citation;
  std::string binding_constraint;
  std::optional<bool> boundary_included;  // set on boundary verdicts when resolvable
};

void to_json(nlohmann::json&, const RangeVerdict&);

struct SpaceVerdict {
  bool trivial = false;
  bool linfty_type = false;  // the lambda1+lambda2 = n scale boundary
  std::string binding_constraint;
  std::string citation = "triviality";
};

/// L^{p,lambda}(|x|^beta) contains only the null function iff
/// lambda1 + lambda2 (1+beta/n) < 0 or lambda1 + lambda2 > n; the
/// lambda1 + lambda2 = n boundary is an L^infty-type space and is flagged
/// separately.
SpaceVerdict space_is_trivial(const MorreyParams&, double beta);

/// ((p, lambda1+lambda2, 0), beta (1-lambda2/n)) when
/// lambda1 + lambda2 (1+beta/n) > 0 and 0 < lambda1+lambda2 < n.
std::pair<MorreyParams, double> identify_space(const MorreyParams&, double beta);

/// Muckenhoupt class forced by maximal-operator boundedness:
/// q = (np + lambda1)/(n - lambda2).
double hl_necessity_class(const MorreyParams&);

struct PowerRange {
  double beta_lo = 0.0;
  double beta_hi = 0.0;
  bool lo_closed = false;
};

/// The beta-interval on which the maximal operator is bounded on
/// L^{p,lambda}(|x|^beta): left endpoint n(lambda1+lambda2-n)/(n-lambda2)
/// closed, right endpoint n(lambda1+lambda2+n(p-1))/(n-lambda2) open,
/// intersected with (-n, inf) and with the nontrivial-space range.
/// lambda2 = n requires -np < lambda1 < 0 and yields (-n-lambda1, inf).
PowerRange hl_power_range(const MorreyParams&);

/// Verdict classifier for a single beta against hl_power_range, with the
/// boundary band and the triviality pre-screen applied.
RangeVerdict hl_power_verdict(const MorreyParams&, double beta);

struct GeneralSufficiency {
  bool admissible = false;           // 0 < lambda1 sigma_w' + lambda2 < n
  double alpha_hi = 0.0;             // n(lambda1+lambda2 theta)/(n-lambda2); inf at lambda2 = n
};

GeneralSufficiency hl_general_sufficient(const MorreyParams&, double sigma_w, double theta);

/// Region in (lambda1, lambda2, alpha) where single-exponent boundedness over
/// all A_{p0} weights transfers to the weighted Morrey scale.
struct ExtrapolationRegion {
  struct Constraint {
    std::string description;
    std::function<bool(double l1, double l2, double alpha)> holds;
  };
  std::vector<Constraint> constraints;

  bool member(double lambda1, double lambda2, double alpha) const;
  std::string first_violated(double lambda1, double lambda2, double alpha) const;
};

ExtrapolationRegion extrapolation_region_full(double p, double sigma_w, double theta, int n);

/// max(0, beta - n(p-1)) < lambda1 + lambda2(1+beta/n) < n + beta, together
/// with lambda1 + lambda2 < n.
bool extrapolation_region_power(double p, double beta, double lambda1, double lambda2, int n);

bool extrapolation_region_limited(double p, double p_minus, double p_plus, double sigma_w,
                                  double theta, double lambda1, double lambda2, double alpha, int n);

/// (q, s) of the Lebesgue space L^q(w^s) embedded in L^{p,lambda}(w):
/// q = pn/(n-lambda1-lambda2), s = (n-lambda2)/(n-lambda1-lambda2).
std::pair<double, double> embedding_exponents(const MorreyParams&);

}  // namespace morrey

#endif
