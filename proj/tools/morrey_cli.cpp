// Command-line driver: norm / maximal / sweep / verify / report.
// Every run is configured by a single JSON document; scalar entries can be
// overridden on the command line with --set key=value.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morrey/harness.hpp"
#include "morrey/maximal.hpp"
#include "morrey/norms.hpp"
#include "morrey/ranges.hpp"
#include "morrey/witness.hpp"

namespace {

nlohmann::json load_config(const std::string& path, const std::vector<std::string>& overrides) {
  nlohmann::json j = nlohmann::json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    in >> j;
  }
  for (const std::string& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::runtime_error("--set expects key=value: " + kv);
    std::string key = kv.substr(0, eq), raw = kv.substr(eq + 1);
    nlohmann::json value;
    try {
      value = nlohmann::json::parse(raw);
    } catch (...) {
      value = raw;  // plain string
    }
    nlohmann::json* node = &j;
    std::size_t pos = 0;
    while (true) {
      auto dot = key.find('.', pos);
      std::string part = key.substr(pos, dot == std::string::npos ? dot : dot - pos);
      if (dot == std::string::npos) {
        (*node)[part] = value;
        break;
      }
      node = &(*node)[part];
      pos = dot + 1;
    }
  }
  return j;
}

int finish(const std::vector<morrey::ExperimentRow>& rows, const morrey::ExperimentConfig& cfg) {
  morrey::run_report(rows, cfg.out_csv, cfg.out_json);
  auto summary = morrey::summarize(rows);
  std::cout << summary.dump(2) << '\n';
  int bad = morrey::disagree_count(rows);
  std::cout << rows.size() << " rows, " << bad << " disagreements -> " << cfg.out_csv << ", "
            << cfg.out_json << '\n';
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted Morrey space toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string rows_path, out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON experiment config");
    cmd->add_option("--set", overrides, "override a config entry, key=value")->take_all();
  };

  CLI::App* cmd_norm = app.add_subcommand("norm", "compute one Morrey norm estimate");
  CLI::App* cmd_maximal = app.add_subcommand("maximal", "apply the maximal operator to a witness");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "run the configured experiment battery");
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the default verification battery");
  CLI::App* cmd_report = app.add_subcommand("report", "re-aggregate a rows CSV into a JSON summary");
  add_common(cmd_norm);
  add_common(cmd_maximal);
  add_common(cmd_sweep);
  add_common(cmd_verify);
  cmd_report->add_option("--rows", rows_path, "rows CSV produced by sweep")->required();
  cmd_report->add_option("--out", out_path, "summary JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_report->parsed()) {
      auto rows = morrey::rows_from_csv(rows_path);
      std::ofstream out(out_path, std::ios::binary);
      out << morrey::summarize(rows).dump(2) << '\n';
      int bad = morrey::disagree_count(rows);
      std::cout << rows.size() << " rows, " << bad << " disagreements\n";
      return bad == 0 ? 0 : 1;
    }

    nlohmann::json j = load_config(config_path, overrides);

    if (cmd_norm->parsed()) {
      if (!j.contains("experiment")) j["experiment"] = "norm";
      if (!j.contains("refinements")) j["refinements"] = 1;
      auto cfg = morrey::ExperimentConfig::from_json(j);
      morrey::MorreyParams params{cfg.p.front(), cfg.lambda1.front(), cfg.lambda2.front(), cfg.n};
      morrey::Weight w = morrey::Weight::power(cfg.beta.front(), cfg.n);
      morrey::GridSpec spec{cfg.n, cfg.R, cfg.m};
      morrey::GridFunction f =
          morrey::build_witness(morrey::witness_by_name(cfg.witnesses.front()), spec, params, w);
      auto balls = morrey::enumerate_balls(cfg.family, spec);
      morrey::NormEstimate est = morrey::morrey_norm(f, w, params, balls, morrey::Normalization::RadiusPower,
                                                     cfg.family.describe());
      nlohmann::json out{{"value", est.value},
                         {"argmax", {{"x", est.argmax.center.x}, {"y", est.argmax.center.y}, {"r", est.argmax.radius}}},
                         {"balls_examined", est.balls_examined},
                         {"strategy", est.strategy},
                         {"lower_bound", est.lower_bound}};
      if (est.triviality) out["trivial_space"] = est.triviality->trivial;
      std::cout << out.dump(2) << '\n';
      return 0;
    }

    if (cmd_maximal->parsed()) {
      if (!j.contains("experiment")) j["experiment"] = "norm";
      if (!j.contains("refinements")) j["refinements"] = 1;
      auto cfg = morrey::ExperimentConfig::from_json(j);
      morrey::MorreyParams params{cfg.p.front(), cfg.lambda1.front(), cfg.lambda2.front(), cfg.n};
      morrey::Weight w = morrey::Weight::power(cfg.beta.front(), cfg.n);
      morrey::GridSpec spec{cfg.n, cfg.R, cfg.m};
      morrey::GridFunction f =
          morrey::build_witness(morrey::witness_by_name(cfg.witnesses.front()), spec, params, w);
      morrey::GridFunction g = morrey::maximal_fast(f, morrey::MaximalConfig::dyadic(spec));
      morrey::write_csv(g, cfg.out_csv);
      std::cout << "maximal function -> " << cfg.out_csv << '\n';
      return 0;
    }

    if (cmd_sweep->parsed()) {
      auto cfg = morrey::ExperimentConfig::from_json(j);
      return finish(morrey::run_experiment(cfg), cfg);
    }

    // verify: either the supplied config, or the built-in battery
    if (!j.empty()) {
      auto cfg = morrey::ExperimentConfig::from_json(j);
      return finish(morrey::run_experiment(cfg), cfg);
    }
    std::vector<morrey::ExperimentRow> rows;
    {
      morrey::ExperimentConfig cfg;
      cfg.experiment = "maximal-range";
      cfg.beta = {-0.75, -0.5, 0.0, 1.0, 1.4, 1.6};
      cfg.out_csv = "verify_rows.csv";
      cfg.out_json = "verify_summary.json";
      auto r = morrey::run_experiment(cfg);
      rows.insert(rows.end(), r.begin(), r.end());
      cfg.lambda1 = {0.0};
      cfg.lambda2 = {0.5};
      cfg.beta = {-0.9, 0.0, 2.5, 3.2};
      r = morrey::run_experiment(cfg);
      rows.insert(rows.end(), r.begin(), r.end());
      cfg.experiment = "scaling-law";
      cfg.lambda1 = {0.0, 0.5};
      cfg.lambda2 = {0.0};
      cfg.beta = {0.0, 0.5};
      cfg.witnesses = {"char-unit"};
      r = morrey::run_experiment(cfg);
      rows.insert(rows.end(), r.begin(), r.end());
      morrey::ExperimentConfig out_cfg;
      out_cfg.out_csv = "verify_rows.csv";
      out_cfg.out_json = "verify_summary.json";
      return finish(rows, out_cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
