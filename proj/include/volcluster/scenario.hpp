#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "volcluster/model.hpp"
#include "volcluster/stats.hpp"

namespace volcluster {

enum class Preset { fig2_news, fig3_constant_value, kesten_trend, quiet_control };

std::string preset_name(Preset p);

// Accepts both the full preset name and the short CLI form
// (fig2, fig3, kesten, quiet).
std::optional<Preset> preset_from_name(std::string_view name);

RegimeConfig preset_config(Preset p);

// Statistics of one series. Each entry is either present or accompanied by
// the reason it could not be computed.
struct SeriesStats {
  std::optional<double> stdev;
  std::optional<double> kurt;
  std::optional<PowerLawFit> fit;
  std::optional<AcfResult> acf_series;
  std::optional<AcfResult> acf_abs;
  std::string stdev_error;
  std::string kurt_error;
  std::string fit_error;
  std::string acf_error;
};

// std, kurtosis and ACFs are computed on the series itself; the power-law
// fit runs on fit_scale * |series| (100 when the series holds fractional
// returns, so the fit is in percent; 1 otherwise).
SeriesStats compute_series_stats(const std::vector<double>& series, std::size_t max_lag,
                                 std::size_t min_tail, double fit_scale);

struct SeedStats {
  std::uint64_t seed = 0;
  std::optional<long long> degenerate_step;
  SeriesStats stats;
};

struct ScenarioAggregate {
  std::optional<double> kurt_median, kurt_q1, kurt_q3, kurt_mean;
  std::optional<double> alpha_median, alpha_q1, alpha_q3, alpha_mean;
  std::optional<double> std_median;
  std::vector<double> acf_mean;      // cross-seed mean ACF of the basis series, lags 0..max_lag
  std::vector<double> acf_abs_mean;  // cross-seed mean ACF of the absolute basis series
  std::optional<double> frac_acf_in_band;     // share of acf_mean lags 1..max_lag inside +-band
  std::optional<double> frac_abs_above_band;  // share of acf_abs_mean lags 1..max_lag above band
  std::optional<PowerLawFit> pooled_fit;      // fit over the pooled seeds' absolute values
  std::string note;                           // why aggregates are missing, "" if complete
};

struct ScenarioReport {
  std::string label;
  std::string basis;  // "returns" or "changes": the series the statistics describe
  std::uint64_t base_seed = 0;
  long long realizations = 0;
  long long steps = 0;
  std::size_t max_lag = 0;
  double band = 0.0;  // 1.96/sqrt(steps)
  std::vector<SeedStats> per_seed;
  ScenarioAggregate aggregate;
  TailCurve pooled_tail;  // survival curve of the pooled absolute values
};

// Runs seeds base_seed..base_seed+realizations-1 of the preset and
// aggregates. steps_override replaces the preset's step count when nonzero.
// Price-change statistics (basis "changes") are used for the trend preset,
// whose prices may wander through zero; return statistics otherwise.
ScenarioReport run_scenario(Preset preset, long long realizations = 10,
                            std::uint64_t base_seed = 0, std::size_t max_lag = 100,
                            long long steps_override = 0);

struct RegimeComparison {
  double acf_abs_a = 0.0;  // cross-seed mean absolute-series ACF of report a at the lag
  double acf_abs_b = 0.0;
  double difference = 0.0;  // acf_abs_a - acf_abs_b
};

RegimeComparison compare_regimes(const ScenarioReport& a, const ScenarioReport& b,
                                 std::size_t lag);

}  // namespace volcluster
