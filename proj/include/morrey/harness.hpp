#ifndef MORREY_HARNESS_HPP
#define MORREY_HARNESS_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "morrey/geometry.hpp"
#include "morrey/grid.hpp"
#include "morrey/norms.hpp"
#include "morrey/witness.hpp"

namespace morrey {

/// One experiment battery: a parameter grid, a grid/family description, and
/// output paths. Fully determines the run; there is no randomness anywhere,
/// so identical configs give byte-identical outputs.
struct ExperimentConfig {
  std::string experiment = "maximal-range";  // norm | maximal-range | equivalence |
                                             // embedding | extrapolation | scaling-law
  int n = 1;
  double R = 16.0;
  int m = 1 << 12;
  int refinements = 2;
  std::vector<double> p{2.0};
  std::vector<double> lambda1{0.5};
  std::vector<double> lambda2{0.0};
  std::vector<double> beta{0.0};
  std::vector<double> alpha{0.0};
  std::vector<std::string> witnesses{"char-unit", "offset-bump", "singular-power"};
  BallFamilySpec family{};
  int k_min = 4;   // dyadic probe scales |x| = 2^{-k}
  int k_max = 8;
  std::vector<double> delta{1.0, 2.0, 4.0};  // scaling-law dilations
  std::string out_csv = "rows.csv";
  std::string out_json = "summary.json";

  void validate() const;
  static ExperimentConfig from_json(const nlohmann::json&);
  nlohmann::json to_json() const;
};

/// One CSV row. The agreement flag compares the numeric growth classification
/// with the analytic verdict; "unstable" whenever the two finest refinements
/// disagree, "domain-sensitive" when the extremal ball moves by more than 1%
/// under domain doubling.
struct ExperimentRow {
  std::string experiment;
  int n = 1;
  double p = 1.0, lambda1 = 0.0, lambda2 = 0.0, beta = 0.0, alpha = 0.0;
  std::string witness;
  int refinement = 0;
  double value = 0.0;
  double slope = 0.0;
  std::string analytic_verdict;
  std::string citation;
  std::string agreement;
};

// decision rule on the dyadic-scale sequence a_k (p-th powers of the running
// suprema): least-squares slope s of log2 a_k; |s| < 0.05 bounded-evidence,
// s > 0.1 unbounded-evidence, divergent values always unbounded
enum class GrowthClass { BoundedEvidence, UnboundedEvidence, Unstable };

struct GrowthFit {
  double slope = 0.0;
  bool diverged = false;
  GrowthClass cls = GrowthClass::Unstable;
};

GrowthFit classify_growth(std::span<const double> a, double bounded_tol = 0.05,
                          double unbounded_tol = 0.1);

std::vector<ExperimentRow> run_maximal_range_experiment(const ExperimentConfig&);
std::vector<ExperimentRow> run_equivalence_experiment(const ExperimentConfig&);
std::vector<ExperimentRow> run_scaling_law_experiment(const ExperimentConfig&);
std::vector<ExperimentRow> run_embedding_experiment(const ExperimentConfig&);
std::vector<ExperimentRow> run_extrapolation_experiment(const ExperimentConfig&);
std::vector<ExperimentRow> run_experiment(const ExperimentConfig&);

/// CSV (fixed column schema) plus a JSON summary of agreement counts per
/// citation tag.
void run_report(std::span<const ExperimentRow>, const std::string& csv_path,
                const std::string& json_path);
std::string rows_to_csv(std::span<const ExperimentRow>);
nlohmann::json summarize(std::span<const ExperimentRow>);
std::vector<ExperimentRow> rows_from_csv(const std::string& path);
int disagree_count(std::span<const ExperimentRow>);

}  // namespace morrey

#endif
