#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "volcluster/io.hpp"
#include "volcluster/model.hpp"
#include "volcluster/scenario.hpp"
#include "volcluster/stats.hpp"

namespace {

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

int run_simulate(const std::string& config_path, std::uint64_t seed, bool seed_given,
                 long long steps, const std::string& out) {
  volcluster::ParsedConfig pc = volcluster::parse_config_file(config_path);
  if (steps > 0) pc.config.steps = steps;
  std::uint64_t use_seed = seed_given ? seed : pc.runner.seed;
  volcluster::SimSeries series = volcluster::simulate(pc.config, use_seed);
  volcluster::write_series(series, out);
  if (series.degenerate_step)
    std::cerr << "warning: degenerate run at step " << *series.degenerate_step
              << " (a return divided by zero)\n";
  return 0;
}

int run_scenario_cmd(const std::string& preset, long long realizations, std::uint64_t seed,
                     long long steps, std::size_t max_lag, const std::string& out) {
  std::optional<volcluster::Preset> p = volcluster::preset_from_name(preset);
  if (!p) throw std::invalid_argument("unknown preset '" + preset + "'");
  volcluster::ScenarioReport report =
      volcluster::run_scenario(*p, realizations, seed, max_lag, steps);
  volcluster::write_report(report, out);
  return 0;
}

int run_analyze(const std::string& input, const std::string& column, std::size_t max_lag,
                std::size_t min_tail, const std::string& out) {
  volcluster::PriceTable table = volcluster::ingest_prices_file(input, column);
  volcluster::Analysis a = volcluster::analyze_prices(table, input, column, max_lag, min_tail);
  volcluster::write_analysis(a, out);
  return 0;
}

int run_fit_tail(const std::string& input, const std::string& column, std::size_t min_tail) {
  volcluster::PriceTable table = volcluster::ingest_prices_file(input, column);
  std::vector<double> returns = volcluster::returns_from_prices(table.prices);
  for (double& r : returns) r = std::fabs(r) * 100.0;
  volcluster::PowerLawFit fit = volcluster::fit_power_law(returns, min_tail);
  std::cout << "alpha=" << shortest(fit.alpha) << " xmin=" << shortest(fit.xmin)
            << " ks=" << shortest(fit.ks) << " n_tail=" << fit.n_tail << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-regime market simulator and return-statistics toolkit"};
  app.require_subcommand(1);

  std::string config_path, preset, input, column, out;
  std::uint64_t seed = 0;
  long long realizations = 10;
  long long steps = 0;
  std::size_t max_lag = 100;
  std::size_t min_tail = 50;

  CLI::App* sim = app.add_subcommand("simulate", "run one series and write it as CSV");
  sim->add_option("--config", config_path, "config file")->required();
  CLI::Option* sim_seed = sim->add_option("--seed", seed, "seed (overrides the config)");
  sim->add_option("--steps", steps, "step count (overrides the config)");
  sim->add_option("--out", out, "output CSV path")->required();

  CLI::App* scen = app.add_subcommand("scenario", "run a preset batch and write a report");
  scen->add_option("--preset", preset, "fig2 | fig3 | kesten | quiet")->required();
  scen->add_option("--realizations", realizations, "number of seeds");
  scen->add_option("--seed", seed, "base seed");
  scen->add_option("--steps", steps, "step count (overrides the preset)");
  scen->add_option("--max-lag", max_lag, "ACF horizon");
  scen->add_option("--out", out, "output directory")->required();

  CLI::App* ana = app.add_subcommand("analyze", "compute return statistics for a price CSV");
  ana->add_option("--input", input, "price CSV")->required();
  ana->add_option("--column", column, "price column name")->required();
  ana->add_option("--max-lag", max_lag, "ACF horizon");
  ana->add_option("--min-tail", min_tail, "minimum tail size for the power-law fit");
  ana->add_option("--out", out, "output path")->required();

  CLI::App* fit = app.add_subcommand("fit-tail", "power-law fit of absolute percent returns");
  fit->add_option("--input", input, "price CSV")->required();
  fit->add_option("--column", column, "price column name")->required();
  fit->add_option("--min-tail", min_tail, "minimum tail size for the power-law fit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return run_simulate(config_path, seed, sim_seed->count() > 0, steps, out);
    if (scen->parsed()) return run_scenario_cmd(preset, realizations, seed, steps, max_lag, out);
    if (ana->parsed()) return run_analyze(input, column, max_lag, min_tail, out);
    return run_fit_tail(input, column, min_tail);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
