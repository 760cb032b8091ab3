#include "volcluster/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace volcluster {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_u64(std::uint64_t v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_ll(long long v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

bool parse_ll(std::string_view s, long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

[[noreturn]] void config_error(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

ScalarDist parse_dist(const std::string& key, std::string_view value, std::size_t line) {
  std::size_t colon = value.find(':');
  if (colon == std::string_view::npos)
    config_error(line, key + " must be exponential:MEAN or degenerate:VALUE");
  std::string_view kind = trim(value.substr(0, colon));
  std::string_view num = trim(value.substr(colon + 1));
  double x;
  if (!parse_double(num, x) || !std::isfinite(x))
    config_error(line, key + ": cannot parse '" + std::string(num) + "' as a number");
  if (kind == "exponential") {
    if (!(x > 0.0)) config_error(line, key + ": exponential mean must be positive");
    return ScalarDist::exponential_mean(x);
  }
  if (kind == "degenerate") return ScalarDist::degenerate_value(x);
  config_error(line, key + " must be exponential:MEAN or degenerate:VALUE");
}

std::string render_dist(const ScalarDist& d) {
  if (d.kind == ScalarDist::Kind::exponential) return "exponential:" + fmt_double(d.param);
  return "degenerate:" + fmt_double(d.param);
}

struct ConfigEntry {
  std::string value;
  std::size_t line = 0;
};

const std::set<std::string> kNewsKeys = {"tau", "tau_prime", "sigma_eps", "sigma_nu", "v0"};
const std::set<std::string> kTrendKeys = {"K", "omega_dist", "noise_sigma"};
const std::set<std::string> kSharedKeys = {"regime", "label",        "steps",  "a_dist",
                                           "b_dist", "p0",           "seed",   "realizations",
                                           "max_lag"};

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  std::map<std::string, ConfigEntry> entries;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) config_error(line_no, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) config_error(line_no, "expected 'key = value'");
    if (!kSharedKeys.count(key) && !kNewsKeys.count(key) && !kTrendKeys.count(key))
      config_error(line_no, "unknown key '" + key + "'");
    if (entries.count(key)) config_error(line_no, "duplicate key '" + key + "'");
    entries[key] = {value, line_no};
  }

  {
    std::vector<std::string> missing;
    for (const char* req : {"regime", "steps", "a_dist"})
      if (!entries.count(req)) missing.push_back(req);
    if (entries.count("regime") && entries["regime"].value == "news" && !entries.count("b_dist"))
      missing.push_back("b_dist");
    if (!missing.empty()) {
      std::string msg = "missing required keys: ";
      for (std::size_t i = 0; i < missing.size(); ++i)
        msg += (i ? ", " : "") + missing[i];
      throw std::invalid_argument(msg);
    }
  }

  ParsedConfig pc;
  RegimeConfig& cfg = pc.config;

  {
    ConfigEntry& e = entries["regime"];
    if (e.value == "news")
      cfg.regime = Regime::news;
    else if (e.value == "trend")
      cfg.regime = Regime::trend;
    else
      config_error(e.line, "regime must be 'news' or 'trend'");
  }
  const bool news = cfg.regime == Regime::news;
  for (const auto& [key, e] : entries) {
    if (news && kTrendKeys.count(key))
      config_error(e.line, "key '" + key + "' does not apply to the news regime");
    if (!news && kNewsKeys.count(key))
      config_error(e.line, "key '" + key + "' does not apply to the trend regime");
  }

  auto take = [&](const char* key) -> ConfigEntry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto take_double = [&](const char* key, double& out, auto&& check, const char* what) {
    ConfigEntry* e = take(key);
    if (!e) return;
    double x;
    if (!parse_double(e->value, x) || !std::isfinite(x))
      config_error(e->line, std::string(key) + ": cannot parse '" + e->value + "' as a number");
    if (!check(x)) config_error(e->line, std::string(key) + " " + what);
    out = x;
  };
  auto take_count = [&](const char* key, long long& out, long long min_value) {
    ConfigEntry* e = take(key);
    if (!e) return;
    long long x;
    if (!parse_ll(e->value, x))
      config_error(e->line, std::string(key) + ": cannot parse '" + e->value + "' as an integer");
    if (x < min_value)
      config_error(e->line,
                   std::string(key) + " must be at least " + std::to_string(min_value));
    out = x;
  };

  auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
  auto nonneg = [](double x) { return x >= 0.0; };
  auto any = [](double) { return true; };

  if (ConfigEntry* e = take("label")) cfg.label = e->value;
  take_count("steps", cfg.steps, 1);

  {
    ConfigEntry* e = take("a_dist");
    ScalarDist a = parse_dist("a_dist", e->value, e->line);
    if (a.kind == ScalarDist::Kind::degenerate && a.param < 0.0)
      config_error(e->line, "a_dist must be nonnegative");
    ScalarDist b = ScalarDist::degenerate_value(0.0);
    if (ConfigEntry* eb = take("b_dist")) {
      b = parse_dist("b_dist", eb->value, eb->line);
      if (b.kind == ScalarDist::Kind::degenerate && b.param < 0.0)
        config_error(eb->line, "b_dist must be nonnegative");
    }
    cfg.coefficients = CoefficientModel::direct(a, b);
  }

  if (news) {
    take_double("tau", cfg.news.tau, in01, "must lie in [0, 1]");
    take_double("tau_prime", cfg.news.tau_prime, in01, "must lie in [0, 1]");
    take_double("sigma_eps", cfg.news.sigma_eps, nonneg, "must be nonnegative");
    take_double("sigma_nu", cfg.news.sigma_nu, nonneg, "must be nonnegative");
    take_double("p0", cfg.news.p0, any, "");
    take_double("v0", cfg.news.v0, any, "");
  } else {
    long long k = 1;
    take_count("K", k, 1);
    cfg.trend.k = static_cast<std::size_t>(k);
    if (ConfigEntry* e = take("omega_dist"))
      cfg.trend.omega_dist = parse_dist("omega_dist", e->value, e->line);
    take_double("noise_sigma", cfg.trend.noise_sigma, nonneg, "must be nonnegative");
    take_double("p0", cfg.trend.p0, any, "");
    cfg.trend.d_init.assign(cfg.trend.k, 0.0);
  }

  if (ConfigEntry* e = take("seed")) {
    if (!parse_u64(e->value, pc.runner.seed))
      config_error(e->line, "seed: cannot parse '" + e->value + "' as a nonnegative integer");
  }
  take_count("realizations", pc.runner.realizations, 1);
  {
    long long h = static_cast<long long>(pc.runner.max_lag);
    take_count("max_lag", h, 1);
    pc.runner.max_lag = static_cast<std::size_t>(h);
  }

  cfg.validate();
  return pc;
}

ParsedConfig parse_config_file(const std::string& path) { return parse_config(read_file(path)); }

std::string render_config(const ParsedConfig& pc) {
  const RegimeConfig& cfg = pc.config;
  cfg.validate();
  if (cfg.coefficients.kind == CoefficientModel::Kind::composed)
    throw std::invalid_argument("composed coefficient models cannot be written to a config file");
  if (cfg.regime == Regime::news && cfg.news.dbar0 != 0.0)
    throw std::invalid_argument("nonzero dbar0 cannot be written to a config file");
  if (cfg.regime == Regime::trend)
    for (double d : cfg.trend.d_init)
      if (d != 0.0)
        throw std::invalid_argument(
            "custom trend seed changes cannot be written to a config file");

  std::ostringstream out;
  out << "regime = " << (cfg.regime == Regime::news ? "news" : "trend") << "\n";
  if (!cfg.label.empty()) out << "label = " << cfg.label << "\n";
  out << "steps = " << fmt_ll(cfg.steps) << "\n";
  out << "a_dist = " << render_dist(cfg.coefficients.a_dist) << "\n";
  out << "b_dist = " << render_dist(cfg.coefficients.b_dist) << "\n";
  if (cfg.regime == Regime::news) {
    out << "tau = " << fmt_double(cfg.news.tau) << "\n";
    out << "tau_prime = " << fmt_double(cfg.news.tau_prime) << "\n";
    out << "sigma_eps = " << fmt_double(cfg.news.sigma_eps) << "\n";
    out << "sigma_nu = " << fmt_double(cfg.news.sigma_nu) << "\n";
    out << "p0 = " << fmt_double(cfg.news.p0) << "\n";
    out << "v0 = " << fmt_double(cfg.news.v0) << "\n";
  } else {
    out << "K = " << fmt_ll(static_cast<long long>(cfg.trend.k)) << "\n";
    out << "omega_dist = " << render_dist(cfg.trend.omega_dist) << "\n";
    out << "noise_sigma = " << fmt_double(cfg.trend.noise_sigma) << "\n";
    out << "p0 = " << fmt_double(cfg.trend.p0) << "\n";
  }
  out << "seed = " << fmt_u64(pc.runner.seed) << "\n";
  out << "realizations = " << fmt_ll(pc.runner.realizations) << "\n";
  out << "max_lag = " << fmt_ll(static_cast<long long>(pc.runner.max_lag)) << "\n";
  return out.str();
}

void write_series(const SimSeries& s, const std::string& path) {
  std::ostringstream out;
  out << "t,price,value,dbar,change,return\n";
  const bool has_news = !s.values.empty();
  out << "0," << fmt_double(s.prices[0]) << ",";
  if (has_news) out << fmt_double(s.values[0]);
  out << ",";
  if (has_news) out << fmt_double(s.dbars[0]);
  out << ",,\n";
  for (std::size_t t = 1; t < s.prices.size(); ++t) {
    out << fmt_u64(t) << "," << fmt_double(s.prices[t]) << ",";
    if (has_news) out << fmt_double(s.values[t]);
    out << ",";
    if (has_news) out << fmt_double(s.dbars[t]);
    out << "," << fmt_double(s.changes[t - 1]) << "," << fmt_double(s.returns[t - 1]) << "\n";
  }
  write_file(path, out.str());
}

PriceTable ingest_prices(const std::string& text, const std::string& column) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw std::invalid_argument("empty input: a header row is required");

  std::vector<std::string_view> header = split(trim(lines[0]), ',');
  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i)
    if (trim(header[i]) == column) {
      col = i;
      break;
    }
  if (col == header.size())
    throw std::invalid_argument("column '" + column + "' not found in the header");

  PriceTable table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t row = i;  // data rows are numbered from 1
    std::vector<std::string_view> cells = split(lines[i], ',');
    if (col >= cells.size())
      throw std::invalid_argument("data row " + std::to_string(row) + ": no value in column '" +
                                  column + "'");
    std::string_view cell = trim(cells[col]);
    double price;
    if (cell.empty() || !parse_double(cell, price))
      throw std::invalid_argument("data row " + std::to_string(row) + ": cannot parse '" +
                                  std::string(cell) + "' in column '" + column + "'");
    if (!std::isfinite(price))
      throw std::invalid_argument("data row " + std::to_string(row) + ": non-finite price");
    table.labels.emplace_back(trim(cells[0]));
    table.prices.push_back(price);
  }
  if (table.prices.size() < 2)
    throw std::invalid_argument("fewer than 2 price rows in the input");
  return table;
}

PriceTable ingest_prices_file(const std::string& path, const std::string& column) {
  return ingest_prices(read_file(path), column);
}

Analysis analyze_prices(const PriceTable& table, const std::string& source,
                        const std::string& column, std::size_t max_lag, std::size_t min_tail) {
  Analysis a;
  a.source = source;
  a.column = column;
  a.rows = table.prices.size();
  std::vector<double> returns = returns_from_prices(table.prices);
  a.returns = returns.size();
  a.stats = compute_series_stats(returns, max_lag, min_tail, 100.0);
  return a;
}

namespace {

void emit_series_stats(std::ostringstream& out, const SeriesStats& s) {
  if (s.stdev)
    out << "std=" << fmt_double(*s.stdev) << "\n";
  else
    out << "std_error=" << s.stdev_error << "\n";
  if (s.kurt)
    out << "kurtosis=" << fmt_double(*s.kurt) << "\n";
  else
    out << "kurtosis_error=" << s.kurt_error << "\n";
  if (s.fit) {
    out << "fit_alpha=" << fmt_double(s.fit->alpha) << "\n";
    out << "fit_xmin=" << fmt_double(s.fit->xmin) << "\n";
    out << "fit_ks=" << fmt_double(s.fit->ks) << "\n";
    out << "fit_n_tail=" << fmt_u64(s.fit->n_tail) << "\n";
  } else {
    out << "fit_error=" << s.fit_error << "\n";
  }
  auto emit_curve = [&out](const char* key, const AcfResult& a) {
    out << key << "=";
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      if (i) out << ",";
      out << fmt_double(a.values[i]);
    }
    out << "\n";
  };
  if (s.acf_series) {
    emit_curve("acf", *s.acf_series);
    out << "acf_n=" << fmt_u64(s.acf_series->n) << "\n";
    out << "acf_band=" << fmt_double(s.acf_series->band) << "\n";
  }
  if (s.acf_abs) emit_curve("acf_abs", *s.acf_abs);
  if (!s.acf_series || !s.acf_abs) out << "acf_error=" << s.acf_error << "\n";
}

void parse_curve(const std::string& value, std::vector<double>& out, const std::string& what) {
  out.clear();
  for (std::string_view part : split(value, ',')) {
    double v;
    if (!parse_double(trim(part), v))
      throw std::invalid_argument("cannot parse " + what + " entry '" + std::string(part) + "'");
    out.push_back(v);
  }
}

}  // namespace

std::string render_analysis(const Analysis& a) {
  std::ostringstream out;
  out << "schema=1\n";
  out << "kind=analysis\n";
  out << "source=" << a.source << "\n";
  out << "column=" << a.column << "\n";
  out << "rows=" << fmt_u64(a.rows) << "\n";
  out << "returns=" << fmt_u64(a.returns) << "\n";
  emit_series_stats(out, a.stats);
  return out.str();
}

void write_analysis(const Analysis& a, const std::string& path) {
  write_file(path, render_analysis(a));
}

std::string render_report(const ScenarioReport& r) {
  std::ostringstream out;
  out << "schema=1\n";
  out << "kind=scenario\n";
  out << "label=" << r.label << "\n";
  out << "basis=" << r.basis << "\n";
  out << "base_seed=" << fmt_u64(r.base_seed) << "\n";
  out << "realizations=" << fmt_ll(r.realizations) << "\n";
  out << "steps=" << fmt_ll(r.steps) << "\n";
  out << "max_lag=" << fmt_u64(r.max_lag) << "\n";
  out << "band=" << fmt_double(r.band) << "\n";
  for (const SeedStats& st : r.per_seed) {
    out << "\n[seed " << fmt_u64(st.seed) << "]\n";
    if (st.degenerate_step)
      out << "degenerate_step=" << fmt_ll(*st.degenerate_step) << "\n";
    emit_series_stats(out, st.stats);
  }
  out << "\n[aggregate]\n";
  const ScenarioAggregate& a = r.aggregate;
  auto emit_opt = [&out](const char* key, const std::optional<double>& v) {
    if (v) out << key << "=" << fmt_double(*v) << "\n";
  };
  emit_opt("kurtosis_median", a.kurt_median);
  emit_opt("kurtosis_q1", a.kurt_q1);
  emit_opt("kurtosis_q3", a.kurt_q3);
  if (a.kurt_q1 && a.kurt_q3) out << "kurtosis_iqr=" << fmt_double(*a.kurt_q3 - *a.kurt_q1) << "\n";
  emit_opt("kurtosis_mean", a.kurt_mean);
  emit_opt("alpha_median", a.alpha_median);
  emit_opt("alpha_q1", a.alpha_q1);
  emit_opt("alpha_q3", a.alpha_q3);
  if (a.alpha_q1 && a.alpha_q3) out << "alpha_iqr=" << fmt_double(*a.alpha_q3 - *a.alpha_q1) << "\n";
  emit_opt("alpha_mean", a.alpha_mean);
  emit_opt("std_median", a.std_median);
  auto emit_vec = [&out](const char* key, const std::vector<double>& v) {
    if (v.empty()) return;
    out << key << "=";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ",";
      out << fmt_double(v[i]);
    }
    out << "\n";
  };
  emit_vec("acf_mean", a.acf_mean);
  emit_vec("acf_abs_mean", a.acf_abs_mean);
  emit_opt("frac_acf_in_band", a.frac_acf_in_band);
  emit_opt("frac_abs_acf_above_band", a.frac_abs_above_band);
  if (a.pooled_fit) {
    out << "pooled_alpha=" << fmt_double(a.pooled_fit->alpha) << "\n";
    out << "pooled_xmin=" << fmt_double(a.pooled_fit->xmin) << "\n";
    out << "pooled_ks=" << fmt_double(a.pooled_fit->ks) << "\n";
    out << "pooled_n_tail=" << fmt_u64(a.pooled_fit->n_tail) << "\n";
  }
  if (!a.note.empty()) out << "note=" << a.note << "\n";
  return out.str();
}

ScenarioReport parse_report(const std::string& text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (lines.empty() || trim(lines[0]) != "schema=1")
    throw std::invalid_argument("report must start with schema=1");

  ScenarioReport rep;
  SeedStats* seed = nullptr;
  bool in_aggregate = false;
  PowerLawFit seed_fit, pooled_fit;
  bool seed_has_fit = false, has_pooled = false;
  std::vector<double> curve;

  auto finish_seed = [&]() {
    if (seed && seed_has_fit) seed->stats.fit = seed_fit;
    seed_has_fit = false;
    seed = nullptr;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '[') {
      finish_seed();
      if (line == "[aggregate]") {
        in_aggregate = true;
        continue;
      }
      if (line.substr(0, 6) == "[seed " && line.back() == ']') {
        std::uint64_t s;
        if (!parse_u64(trim(line.substr(6, line.size() - 7)), s))
          throw std::invalid_argument("cannot parse seed section header");
        rep.per_seed.emplace_back();
        rep.per_seed.back().seed = s;
        seed = &rep.per_seed.back();
        continue;
      }
      throw std::invalid_argument("unexpected section '" + std::string(line) + "'");
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("unexpected report line '" + std::string(line) + "'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(line.substr(eq + 1));

    auto as_double = [&]() {
      double v;
      if (!parse_double(trim(value), v))
        throw std::invalid_argument("cannot parse report value for '" + key + "'");
      return v;
    };
    auto as_u64 = [&]() {
      std::uint64_t v;
      if (!parse_u64(trim(value), v))
        throw std::invalid_argument("cannot parse report value for '" + key + "'");
      return v;
    };

    if (!seed && !in_aggregate) {
      if (key == "kind") {
        if (trim(value) != "scenario") throw std::invalid_argument("not a scenario report");
      } else if (key == "label")
        rep.label = value;
      else if (key == "basis")
        rep.basis = value;
      else if (key == "base_seed")
        rep.base_seed = as_u64();
      else if (key == "realizations")
        rep.realizations = static_cast<long long>(as_u64());
      else if (key == "steps")
        rep.steps = static_cast<long long>(as_u64());
      else if (key == "max_lag")
        rep.max_lag = static_cast<std::size_t>(as_u64());
      else if (key == "band")
        rep.band = as_double();
      else
        throw std::invalid_argument("unexpected report key '" + key + "'");
      continue;
    }
    if (seed) {
      SeriesStats& st = seed->stats;
      if (key == "degenerate_step")
        seed->degenerate_step = static_cast<long long>(as_u64());
      else if (key == "std")
        st.stdev = as_double();
      else if (key == "std_error")
        st.stdev_error = value;
      else if (key == "kurtosis")
        st.kurt = as_double();
      else if (key == "kurtosis_error")
        st.kurt_error = value;
      else if (key == "fit_alpha") {
        seed_fit.alpha = as_double();
        seed_has_fit = true;
      } else if (key == "fit_xmin")
        seed_fit.xmin = as_double();
      else if (key == "fit_ks")
        seed_fit.ks = as_double();
      else if (key == "fit_n_tail")
        seed_fit.n_tail = static_cast<std::size_t>(as_u64());
      else if (key == "fit_error")
        st.fit_error = value;
      else if (key == "acf") {
        parse_curve(value, curve, "acf");
        st.acf_series = AcfResult{};
        st.acf_series->values = curve;
        st.acf_series->lags.resize(curve.size());
        for (std::size_t h = 0; h < curve.size(); ++h) st.acf_series->lags[h] = h;
      } else if (key == "acf_n") {
        if (st.acf_series) st.acf_series->n = static_cast<std::size_t>(as_u64());
      } else if (key == "acf_band") {
        if (st.acf_series) st.acf_series->band = as_double();
      } else if (key == "acf_abs") {
        parse_curve(value, curve, "acf_abs");
        st.acf_abs = AcfResult{};
        st.acf_abs->values = curve;
        st.acf_abs->lags.resize(curve.size());
        for (std::size_t h = 0; h < curve.size(); ++h) st.acf_abs->lags[h] = h;
        if (st.acf_series) {
          st.acf_abs->n = st.acf_series->n;
          st.acf_abs->band = st.acf_series->band;
        }
      } else if (key == "acf_error")
        st.acf_error = value;
      else
        throw std::invalid_argument("unexpected seed key '" + key + "'");
      continue;
    }
    ScenarioAggregate& a = rep.aggregate;
    if (key == "kurtosis_median")
      a.kurt_median = as_double();
    else if (key == "kurtosis_q1")
      a.kurt_q1 = as_double();
    else if (key == "kurtosis_q3")
      a.kurt_q3 = as_double();
    else if (key == "kurtosis_iqr" || key == "alpha_iqr")
      ;  // derived from the quartiles on output
    else if (key == "kurtosis_mean")
      a.kurt_mean = as_double();
    else if (key == "alpha_median")
      a.alpha_median = as_double();
    else if (key == "alpha_q1")
      a.alpha_q1 = as_double();
    else if (key == "alpha_q3")
      a.alpha_q3 = as_double();
    else if (key == "alpha_mean")
      a.alpha_mean = as_double();
    else if (key == "std_median")
      a.std_median = as_double();
    else if (key == "acf_mean")
      parse_curve(value, a.acf_mean, "acf_mean");
    else if (key == "acf_abs_mean")
      parse_curve(value, a.acf_abs_mean, "acf_abs_mean");
    else if (key == "frac_acf_in_band")
      a.frac_acf_in_band = as_double();
    else if (key == "frac_abs_acf_above_band")
      a.frac_abs_above_band = as_double();
    else if (key == "pooled_alpha") {
      pooled_fit.alpha = as_double();
      has_pooled = true;
    } else if (key == "pooled_xmin")
      pooled_fit.xmin = as_double();
    else if (key == "pooled_ks")
      pooled_fit.ks = as_double();
    else if (key == "pooled_n_tail")
      pooled_fit.n_tail = static_cast<std::size_t>(as_u64());
    else if (key == "note")
      a.note = value;
    else
      throw std::invalid_argument("unexpected aggregate key '" + key + "'");
  }
  finish_seed();
  if (has_pooled) rep.aggregate.pooled_fit = pooled_fit;
  return rep;
}

ScenarioReport parse_report_file(const std::string& path) {
  return parse_report(read_file(path));
}

void write_report(const ScenarioReport& r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "'");
  write_file(dir + "/report.txt", render_report(r));

  std::ostringstream acf;
  acf << "lag,acf_mean,acf_abs_mean,band\n";
  const ScenarioAggregate& a = r.aggregate;
  const std::size_t n = std::max(a.acf_mean.size(), a.acf_abs_mean.size());
  for (std::size_t h = 0; h < n; ++h) {
    acf << fmt_u64(h) << ",";
    if (h < a.acf_mean.size()) acf << fmt_double(a.acf_mean[h]);
    acf << ",";
    if (h < a.acf_abs_mean.size()) acf << fmt_double(a.acf_abs_mean[h]);
    acf << "," << fmt_double(r.band) << "\n";
  }
  write_file(dir + "/acf_mean.csv", acf.str());

  std::ostringstream tail;
  tail << "x,survival,log10_x,log10_survival\n";
  for (std::size_t i = 0; i < r.pooled_tail.x.size(); ++i) {
    tail << fmt_double(r.pooled_tail.x[i]) << "," << fmt_double(r.pooled_tail.survival[i]) << ","
         << fmt_double(std::log10(r.pooled_tail.x[i])) << ","
         << fmt_double(std::log10(r.pooled_tail.survival[i])) << "\n";
  }
  write_file(dir + "/tail.csv", tail.str());
}

}  // namespace volcluster
