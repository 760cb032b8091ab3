#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "volcluster/model.hpp"
#include "volcluster/scenario.hpp"

namespace volcluster {

struct RunnerSettings {
  std::uint64_t seed = 0;
  long long realizations = 10;
  std::size_t max_lag = 100;

  bool operator==(const RunnerSettings&) const = default;
};

struct ParsedConfig {
  RegimeConfig config;
  RunnerSettings runner;

  bool operator==(const ParsedConfig&) const = default;
};

// Flat `key = value` text with `#` comments. Unknown keys, keys that do not
// apply to the configured regime, malformed values, and out-of-range values
// are all rejected with the key and line named. Missing optional keys take
// the documented defaults.
ParsedConfig parse_config(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

// Inverse of parse_config for every configuration the key set can express.
// Throws for configurations it cannot represent (composed coefficients,
// nonzero dbar0, custom trend seed changes).
std::string render_config(const ParsedConfig& pc);

void write_series(const SimSeries& s, const std::string& path);

struct PriceTable {
  std::vector<std::string> labels;  // first column of each row
  std::vector<double> prices;
};

// Parses comma-separated text with a header row; column selects the price
// field by header name. Data rows are numbered from 1 in error messages.
PriceTable ingest_prices(const std::string& text, const std::string& column);
PriceTable ingest_prices_file(const std::string& path, const std::string& column);

struct Analysis {
  std::string source;
  std::string column;
  std::size_t rows = 0;     // price rows ingested
  std::size_t returns = 0;  // rows - 1
  SeriesStats stats;        // fit in percent of the fractional returns
};

Analysis analyze_prices(const PriceTable& table, const std::string& source,
                        const std::string& column, std::size_t max_lag, std::size_t min_tail);

std::string render_analysis(const Analysis& a);
void write_analysis(const Analysis& a, const std::string& path);

// Writes report.txt plus the plot-ready companions acf_mean.csv (lag, mean
// ACF of the basis series, mean ACF of its absolute values, band) and
// tail.csv (pooled survival curve with log-log columns) into dir.
void write_report(const ScenarioReport& r, const std::string& dir);

std::string render_report(const ScenarioReport& r);
ScenarioReport parse_report(const std::string& text);
ScenarioReport parse_report_file(const std::string& path);

}  // namespace volcluster
