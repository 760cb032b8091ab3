// Acceptance gate: one criterion per invocation, selected by the single
// numeric argument. Prints one PASS/FAIL line and exits 0 or 1 so each
// criterion registers as its own test.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "volcluster/distributions.hpp"
#include "volcluster/io.hpp"
#include "volcluster/model.hpp"
#include "volcluster/rng.hpp"
#include "volcluster/scenario.hpp"
#include "volcluster/stats.hpp"

using namespace volcluster;

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

ScenarioReport fig2_report() { return run_scenario(Preset::fig2_news, 10, 0, 100); }

// Lags 2..100 of the return ACF inside +-1.5 band, per seed.
int lags_in_band(const AcfResult& a, double band) {
  int in = 0;
  for (std::size_t h = 2; h < a.values.size(); ++h)
    if (std::fabs(a.values[h]) <= 1.5 * band) ++in;
  return in;
}

int seeds_with_quiet_acf(const ScenarioReport& r) {
  int seeds_ok = 0;
  for (const SeedStats& s : r.per_seed) {
    if (!s.stats.acf_series) continue;
    int in = lags_in_band(*s.stats.acf_series, r.band);
    int total = static_cast<int>(s.stats.acf_series->values.size()) - 2;
    if (in * 10 >= total * 9) ++seeds_ok;
  }
  return seeds_ok;
}

double frac_abs_above(const ScenarioReport& r) {
  return r.aggregate.frac_abs_above_band ? *r.aggregate.frac_abs_above_band : 0.0;
}

bool criterion_1(std::string& detail) {
  ScenarioReport r = fig2_report();
  if (!r.aggregate.pooled_fit) {
    detail = "pooled fit unavailable: " + r.aggregate.note;
    return false;
  }
  const PowerLawFit& f = *r.aggregate.pooled_fit;
  detail = "pooled |return| fit alpha=" + num(f.alpha) + " (need 2.2..4.0), xmin=" + num(f.xmin) +
           " (need 0.5..3.0), n_tail=" + std::to_string(f.n_tail);
  return f.alpha >= 2.2 && f.alpha <= 4.0 && f.xmin >= 0.5 && f.xmin <= 3.0;
}

bool criterion_2(std::string& detail) {
  ScenarioReport r = fig2_report();
  if (!r.aggregate.kurt_median || !r.aggregate.kurt_mean) {
    detail = "kurtosis unavailable: " + r.aggregate.note;
    return false;
  }
  double med = *r.aggregate.kurt_median;
  double mean = *r.aggregate.kurt_mean;
  detail = "kurtosis median=" + num(med) + " (need >=10), mean=" + num(mean) + " (need 10..60)";
  return med >= 10.0 && mean >= 10.0 && mean <= 60.0;
}

bool criterion_3(std::string& detail) {
  ScenarioReport r = fig2_report();
  int seeds_ok = seeds_with_quiet_acf(r);
  detail = "seeds with >=90% of return-ACF lags 2..100 inside 1.5x band: " +
           std::to_string(seeds_ok) + "/10 (need >=8)";
  return seeds_ok >= 8;
}

bool criterion_4(std::string& detail) {
  ScenarioReport r = fig2_report();
  double frac = frac_abs_above(r);
  detail = "mean |return| ACF above band at " + num(100.0 * frac) + "% of lags 1..100 (need >=90%)";
  return frac >= 0.90;
}

bool criterion_5(std::string& detail) {
  ScenarioReport news = fig2_report();
  ScenarioReport trend = run_scenario(Preset::kesten_trend, 10, 0, 100);
  RegimeComparison cmp = compare_regimes(trend, news, 50);
  detail = "lag-50 mean |change| ACF: trend=" + num(cmp.acf_abs_a) +
           ", news=" + num(cmp.acf_abs_b) + " (need trend < news and trend < 0.05)";
  return cmp.acf_abs_a < cmp.acf_abs_b && cmp.acf_abs_a < 0.05;
}

bool criterion_6(std::string& detail) {
  RegimeConfig cfg = preset_config(Preset::fig3_constant_value);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SimSeries s = simulate(cfg, seed);
    for (double v : s.values)
      if (v != 100.0) {
        detail = "seed " + std::to_string(seed) + " moved the value to " + num(v);
        return false;
      }
  }
  ScenarioReport r = run_scenario(Preset::fig3_constant_value, 10, 0, 100);
  for (const SeedStats& s : r.per_seed)
    if (!s.stats.stdev || !(*s.stats.stdev > 0.0)) {
      detail = "seed " + std::to_string(s.seed) + " produced no return spread";
      return false;
    }
  int seeds_ok = seeds_with_quiet_acf(r);
  double frac = frac_abs_above(r);
  detail = "values constant at 100; return std positive on all seeds; quiet-ACF seeds " +
           std::to_string(seeds_ok) + "/10 (need >=8); |return| ACF above band at " +
           num(100.0 * frac) + "% of lags (need >=90%)";
  return seeds_ok >= 8 && frac >= 0.90;
}

bool criterion_7(std::string& detail) {
  RegimeConfig cfg = preset_config(Preset::kesten_trend);
  cfg.steps = 100000;
  SimSeries s = simulate(cfg, 0);
  std::vector<double> abs_changes(s.changes.size());
  for (std::size_t i = 0; i < s.changes.size(); ++i) abs_changes[i] = std::fabs(s.changes[i]);
  double h = hill_estimator(abs_changes, 5000);
  detail = "Hill estimate of |changes| at k=5000: " + num(h) + " (need 2.5..3.5)";
  return h >= 2.5 && h <= 3.5;
}

bool criterion_8(std::string& detail) {
  Stream ps(2024, Channel::coefficients);
  std::vector<double> pareto(100000);
  for (double& v : pareto) v = std::pow(ps.unit(), -1.0 / 3.0);
  PowerLawFit f = fit_power_law(pareto);
  bool fit_ok = std::fabs(f.alpha - 3.0) <= 0.05;

  Stream as(7, Channel::trend_noise);
  std::vector<double> ar(100000);
  double prev = 0.0;
  for (double& v : ar) {
    prev = 0.5 * prev + normal(as, 1.0);
    v = prev;
  }
  AcfResult acf_ar = acf(ar, 10);
  double ar_err = 0.0;
  for (std::size_t h = 1; h <= 10; ++h)
    ar_err = std::max(ar_err, std::fabs(acf_ar.values[h] - std::pow(0.5, double(h))));
  bool ar_ok = ar_err <= 0.02;

  std::vector<double> alt(100);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
  bool alt_ok = kurtosis(alt) == 1.0;

  Stream gs(11, Channel::trend_noise);
  std::vector<double> gauss(1000000);
  for (double& v : gauss) v = normal(gs, 1.0);
  double gk = kurtosis(gauss);
  bool gauss_ok = std::fabs(gk - 3.0) <= 0.1;

  detail = "Pareto alpha err=" + num(std::fabs(f.alpha - 3.0)) + " (<=0.05), AR(1) max err=" +
           num(ar_err) + " (<=0.02), alternating kurtosis " + (alt_ok ? "==1" : "!=1") +
           ", Gaussian kurtosis=" + num(gk) + " (3+-0.1)";
  return fit_ok && ar_ok && alt_ok && gauss_ok;
}

bool accumulation_ok() {
  for (Preset p : {Preset::fig2_news, Preset::kesten_trend})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      SimSeries s = simulate(preset_config(p), seed);
      double sum = 0.0;
      double abs_sum = 0.0;
      for (double d : s.changes) {
        sum += d;
        abs_sum += std::fabs(d);
      }
      double p0 = s.prices.front();
      if (std::fabs(s.prices.back() - (p0 + sum)) > 1e-9 * (1.0 + std::fabs(p0) + abs_sum))
        return false;
    }
  return true;
}

bool micro_aggregate_ok() {
  Stream rng(31, Channel::coefficients);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.next_u64() % 101;
    std::size_t m = rng.next_u64() % 101;
    double alpha = exponential(rng, 1.0);
    double gamma = exponential(rng, 1.0);
    double price = 90.0 + 20.0 * rng.unit();
    std::vector<MicroAgent> agents;
    double dsum = 0.0, vsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = normal(rng, 0.5);
      dsum += d;
      agents.push_back(MicroAgent::speculator(alpha, d));
    }
    for (std::size_t j = 0; j < m; ++j) {
      double v = 100.0 + normal(rng, 5.0);
      vsum += v;
      agents.push_back(MicroAgent::investor(gamma, v));
    }
    double micro = micro_excess_demand(agents, price);
    double agg = 0.0;
    if (n) agg += alpha * double(n) * (dsum / double(n));
    if (m) agg += gamma * double(m) * (vsum / double(m) - price);
    double scale = std::max({1.0, std::fabs(micro), std::fabs(agg)});
    if (std::fabs(micro - agg) > 1e-9 * scale) return false;
  }
  return true;
}

bool bookkeeping_ok() {
  NewsParams p;
  MarketState st = make_state(p);
  Coefficients c{0.05, 0.2};
  Stream shocks(13, Channel::trend_noise);
  double eps_sum = 0.0;
  double vbar_acc = 100.0;  // accumulated in step order, like the recursion itself
  for (int t = 0; t < 500; ++t) {
    NewsDraws d;
    d.arrived_eps = (t % 2) == 0;
    d.eps = normal(shocks, 0.1);
    d.arrived_nu = (t % 5) == 0;
    d.nu = normal(shocks, 1.0);
    if (d.arrived_eps) eps_sum += d.eps;
    if (d.arrived_nu) vbar_acc += d.nu;
    step_news(st, c, d);
    if (st.dbar != eps_sum) return false;
    if (st.vbar != vbar_acc) return false;
  }
  return true;
}

bool composed_ok() {
  Stream s(1, Channel::coefficients);
  CoefficientModel m = CoefficientModel::composed(1.0, 2.0, 0.1, IntDist::degenerate_count(5),
                                                  IntDist::degenerate_count(0));
  Coefficients c = sample_coefficients(m, s);
  return c.a == 1.0 * 0.1 * 5.0 && c.b == 2.0 * 0.1 * 0.0;
}

bool roundtrips_ok() {
  for (Preset p : {Preset::fig2_news, Preset::fig3_constant_value, Preset::kesten_trend,
                   Preset::quiet_control}) {
    ParsedConfig pc;
    pc.config = preset_config(p);
    if (!(parse_config(render_config(pc)) == pc)) return false;
  }
  RegimeConfig cfg = preset_config(Preset::fig2_news);
  cfg.steps = 200;
  SimSeries s = simulate(cfg, 0);
  write_series(s, "acceptance_series.csv");
  PriceTable t = ingest_prices_file("acceptance_series.csv", "price");
  std::remove("acceptance_series.csv");
  if (t.prices.size() != s.prices.size()) return false;
  for (std::size_t i = 0; i < s.prices.size(); ++i)
    if (t.prices[i] != s.prices[i]) return false;
  return true;
}

bool replay_ok() {
  for (Preset p : {Preset::fig2_news, Preset::kesten_trend}) {
    RegimeConfig cfg = preset_config(p);
    cfg.steps = 2000;
    SimSeries a = simulate(cfg, 3);
    SimSeries b = simulate(cfg, 3);
    if (a.prices != b.prices || a.changes != b.changes || a.returns != b.returns) return false;
  }
  ScenarioReport ra = run_scenario(Preset::fig2_news, 2, 0, 10, 1000);
  ScenarioReport rb = run_scenario(Preset::fig2_news, 2, 0, 10, 1000);
  return render_report(ra) == render_report(rb);
}

bool criterion_9(std::string& detail) {
  struct Part {
    const char* name;
    bool ok;
  } parts[] = {
      {"accumulation", accumulation_ok()},   {"micro/aggregate", micro_aggregate_ok()},
      {"bookkeeping", bookkeeping_ok()},     {"composed coefficients", composed_ok()},
      {"round-trips", roundtrips_ok()},      {"deterministic replay", replay_ok()},
  };
  bool all = true;
  detail = "";
  for (const Part& p : parts) {
    all = all && p.ok;
    detail += std::string(p.name) + (p.ok ? " ok" : " FAILED") + "; ";
  }
  detail.resize(detail.size() - 2);
  return all;
}

bool criterion_10(std::string& detail) {
  ScenarioReport r = fig2_report();
  if (!r.aggregate.std_median) {
    detail = "return std unavailable: " + r.aggregate.note;
    return false;
  }
  double med = *r.aggregate.std_median;
  detail = "median per-seed return std=" + num(med) + " (need 0.003..0.03)";
  return med >= 0.003 && med <= 0.03;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance CRITERION(1..10)\n");
    return 2;
  }
  int n = std::atoi(argv[1]);
  bool ok = false;
  std::string detail;
  switch (n) {
    case 1: ok = criterion_1(detail); break;
    case 2: ok = criterion_2(detail); break;
    case 3: ok = criterion_3(detail); break;
    case 4: ok = criterion_4(detail); break;
    case 5: ok = criterion_5(detail); break;
    case 6: ok = criterion_6(detail); break;
    case 7: ok = criterion_7(detail); break;
    case 8: ok = criterion_8(detail); break;
    case 9: ok = criterion_9(detail); break;
    case 10: ok = criterion_10(detail); break;
    default: std::fprintf(stderr, "unknown criterion %d\n", n); return 2;
  }
  std::printf("acceptance %d %s: %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  return ok ? 0 : 1;
}
