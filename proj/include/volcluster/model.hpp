#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "volcluster/distributions.hpp"
#include "volcluster/rng.hpp"

namespace volcluster {

struct Coefficients {
  double a = 0.0;  // speculator reaction per unit of expected change
  double b = 0.0;  // investor reaction per unit of mispricing
};

// Per-period reaction coefficients. Either drawn directly from distributions
// of a_t and b_t, or composed from individual demand sensitivities and random
// participation counts: a_t = alpha*beta*N_t, b_t = gamma*beta*M_t.
struct CoefficientModel {
  enum class Kind { direct, composed };
  Kind kind = Kind::direct;

  ScalarDist a_dist;
  ScalarDist b_dist;

  double alpha = 0.0;
  double gamma = 0.0;
  double beta = 0.0;
  IntDist n_dist;
  IntDist m_dist;

  static CoefficientModel direct(ScalarDist a, ScalarDist b) {
    CoefficientModel m;
    m.kind = Kind::direct;
    m.a_dist = a;
    m.b_dist = b;
    return m;
  }
  static CoefficientModel composed(double alpha, double gamma, double beta, IntDist n, IntDist m) {
    CoefficientModel c;
    c.kind = Kind::composed;
    c.alpha = alpha;
    c.gamma = gamma;
    c.beta = beta;
    c.n_dist = n;
    c.m_dist = m;
    return c;
  }

  bool operator==(const CoefficientModel&) const = default;
};

// Consumes draws for one period: a then b, or N then M.
inline Coefficients sample_coefficients(const CoefficientModel& m, Stream& s) {
  if (m.kind == CoefficientModel::Kind::direct) {
    double a = m.a_dist.sample(s);
    double b = m.b_dist.sample(s);
    return {a, b};
  }
  double n = static_cast<double>(m.n_dist.sample(s));
  double mm = static_cast<double>(m.m_dist.sample(s));
  return {m.alpha * m.beta * n, m.gamma * m.beta * mm};
}

struct NewsParams {
  double tau = 1.0;         // arrival probability of news about the expected change
  double tau_prime = 0.1;   // arrival probability of news about fundamental value
  double sigma_eps = 0.1;   // shock scale on the mean expected change
  double sigma_nu = 1.0;    // shock scale on the mean fundamental value
  double p0 = 100.0;
  double v0 = 100.0;
  double dbar0 = 0.0;

  bool operator==(const NewsParams&) const = default;
};

struct TrendParams {
  std::size_t k = 1;  // number of past changes the trend estimate looks back on
  ScalarDist omega_dist = ScalarDist::degenerate_value(1.0);
  double noise_sigma = 0.0;
  std::vector<double> d_init = {0.0};  // seed changes, most recent first
  double p0 = 100.0;

  bool operator==(const TrendParams&) const = default;
};

enum class Regime { news, trend };

struct RegimeConfig {
  Regime regime = Regime::news;
  NewsParams news;
  TrendParams trend;
  CoefficientModel coefficients;
  long long steps = 0;
  std::string label;

  void validate() const;
  bool operator==(const RegimeConfig&) const = default;
};

// Rolling state of one simulated market. last_changes is only maintained by
// the trend regime and holds the most recent change first.
struct MarketState {
  long long t = 0;
  double price = 0.0;
  double dbar = 0.0;
  double vbar = 0.0;
  std::vector<double> last_changes;
};

MarketState make_state(const NewsParams& p);
MarketState make_state(const TrendParams& p);

struct NewsDraws {
  bool arrived_eps = false;
  double eps = 0.0;
  bool arrived_nu = false;
  double nu = 0.0;
};

// One indicator and one shock are consumed per channel every period, whether
// or not the indicator fires, so a given seed replays identically when
// parameters change.
NewsDraws sample_news(const NewsParams& p, Stream& speculator, Stream& investor);

// Applies one period of the news regime and returns the price change.
double step_news(MarketState& st, const Coefficients& c, const NewsDraws& d);
double step_news(MarketState& st, const NewsParams& p, const Coefficients& c, Stream& speculator,
                 Stream& investor);

// Applies one period of the trend regime and returns the price change.
// weights holds one multiplier per remembered lag, most recent first.
double step_trend(MarketState& st, const Coefficients& c, const std::vector<double>& weights,
                  double noise);
double step_trend(MarketState& st, const TrendParams& p, const Coefficients& c, Stream& weights,
                  Stream& noise);

struct SimSeries {
  std::string config_label;
  std::uint64_t seed = 0;
  std::vector<double> prices;   // steps+1 entries, prices[0] is the initial price
  std::vector<double> values;   // steps+1 entries in the news regime, empty otherwise
  std::vector<double> dbars;    // steps+1 entries in the news regime, empty otherwise
  std::vector<double> changes;  // steps entries
  std::vector<double> returns;  // steps entries, fractional price changes
  // First period whose return is not finite, if any. Later entries of the
  // series are still recorded as computed.
  std::optional<long long> degenerate_step;
};

SimSeries simulate(const RegimeConfig& cfg, std::uint64_t seed);

// Fractional returns r_t = (p_t - p_{t-1}) / p_{t-1}. Throws if a divisor is
// exactly zero, naming the offending index.
std::vector<double> returns_from_prices(const std::vector<double>& prices);

struct MicroAgent {
  enum class Kind { speculator, investor };
  Kind kind = Kind::speculator;
  double coefficient = 0.0;  // demand sensitivity of this agent
  double belief = 0.0;       // expected change (speculator) or fundamental value (investor)

  static MicroAgent speculator(double alpha, double expected_change) {
    return {Kind::speculator, alpha, expected_change};
  }
  static MicroAgent investor(double gamma, double expected_value) {
    return {Kind::investor, gamma, expected_value};
  }
};

// Sum of individual demands at the quoted price.
double micro_excess_demand(const std::vector<MicroAgent>& agents, double price);

}  // namespace volcluster
