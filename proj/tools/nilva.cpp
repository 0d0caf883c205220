// nilva: exact verification suites for the logarithmic vertex algebra of a
// nilmanifold double.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nilva/verifier.hpp"

namespace v = nilva::verifier;

int main(int argc, char** argv) {
  CLI::App app{"nilva: exact symbolic verification of nilmanifold current and field algebras"};
  app.require_subcommand(1);

  std::string suite;
  std::int64_t k = 0, j = 0;
  int window = 0, log_degree = 3, jobs = 1;
  std::int64_t mode_grid = 4, triple_grid = 4, monomial_window = 12;
  std::uint64_t seed = 1;
  std::string variant, report, config;

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "lie, group, forms, kernels, modes, fields, currents, special-cases, taylor, all")
      ->required();
  auto* o_k = check->add_option("--k", k, "parameter k");
  auto* o_j = check->add_option("--j", j, "parameter j");
  auto* o_window = check->add_option("--window", window, "exponent window N");
  auto* o_log = check->add_option("--log-degree", log_degree, "log-degree bound L");
  auto* o_grid = check->add_option("--mode-grid", mode_grid, "mode grid for the mode algebra");
  auto* o_triple = check->add_option("--triple-grid", triple_grid, "mode grid for the y1 y1 y3 triple");
  auto* o_mono = check->add_option("--monomial-window", monomial_window, "mode window for monomial comparison");
  auto* o_variant = check->add_option("--variant", variant, "as-written, corrected or both");
  auto* o_jobs = check->add_option("--jobs", jobs, "worker threads");
  auto* o_seed = check->add_option("--seed", seed, "seed for sampled checks");
  auto* o_report = check->add_option("--report", report, "path of the JSON report");
  check->add_option("--config", config, "key = value configuration file; flags override it");

  std::string topic;
  auto* explain = app.add_subcommand("explain", "describe a check");
  explain->add_option("name", topic, "check name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : v::kExitConfig;
  }

  if (*explain) {
    if (auto text = v::explain(topic)) {
      std::cout << *text << "\n";
      return v::kExitPass;
    }
    std::cerr << "nilva: unknown check '" << topic << "'; known:";
    for (const auto& t : v::explain_topics()) std::cerr << " " << t;
    std::cerr << "\n";
    return v::kExitConfig;
  }

  v::SuiteConfig cfg;
  try {
    if (!config.empty()) v::apply_config_file(cfg, config);
    cfg.checks = v::parse_suites(suite);
    if (*o_k) cfg.k = k;
    if (*o_j) cfg.j = j;
    if (*o_window) cfg.window = window;
    if (*o_log) cfg.log_degree = log_degree;
    if (*o_grid) cfg.mode_grid = mode_grid;
    if (*o_triple) cfg.triple_grid = triple_grid;
    if (*o_mono) cfg.monomial_window = monomial_window;
    if (*o_variant) cfg.variant = v::parse_variant(variant);
    if (*o_jobs) cfg.jobs = jobs;
    if (*o_seed) cfg.seed = seed;
    if (*o_report) cfg.output = report;
  } catch (const v::ConfigError& e) {
    std::cerr << "nilva: config error: " << e.what() << "\n";
    return v::kExitConfig;
  }
  return v::run_command(cfg, std::cout, std::cerr);
}
