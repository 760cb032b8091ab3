#include "volcluster/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace volcluster {

void RegimeConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (coefficients.kind == CoefficientModel::Kind::composed) {
    if (!(coefficients.alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(coefficients.gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (!(coefficients.beta > 0.0)) throw std::invalid_argument("beta must be positive");
  } else {
    if (coefficients.a_dist.kind == ScalarDist::Kind::degenerate &&
        coefficients.a_dist.param < 0.0)
      throw std::invalid_argument("a_dist must be nonnegative");
    if (coefficients.b_dist.kind == ScalarDist::Kind::degenerate &&
        coefficients.b_dist.param < 0.0)
      throw std::invalid_argument("b_dist must be nonnegative");
  }
  if (regime == Regime::news) {
    if (!(news.tau >= 0.0 && news.tau <= 1.0))
      throw std::invalid_argument("tau must lie in [0, 1]");
    if (!(news.tau_prime >= 0.0 && news.tau_prime <= 1.0))
      throw std::invalid_argument("tau_prime must lie in [0, 1]");
    if (!(news.sigma_eps >= 0.0)) throw std::invalid_argument("sigma_eps must be nonnegative");
    if (!(news.sigma_nu >= 0.0)) throw std::invalid_argument("sigma_nu must be nonnegative");
  } else {
    if (trend.k < 1) throw std::invalid_argument("K must be at least 1");
    if (!(trend.noise_sigma >= 0.0))
      throw std::invalid_argument("noise_sigma must be nonnegative");
    if (trend.d_init.size() != trend.k)
      throw std::invalid_argument("d_init must hold exactly K entries");
  }
}

MarketState make_state(const NewsParams& p) {
  MarketState st;
  st.price = p.p0;
  st.dbar = p.dbar0;
  st.vbar = p.v0;
  return st;
}

MarketState make_state(const TrendParams& p) {
  MarketState st;
  st.price = p.p0;
  st.last_changes = p.d_init;
  return st;
}

NewsDraws sample_news(const NewsParams& p, Stream& speculator, Stream& investor) {
  NewsDraws d;
  d.arrived_eps = bernoulli(speculator, p.tau);
  d.eps = normal(speculator, p.sigma_eps);
  d.arrived_nu = bernoulli(investor, p.tau_prime);
  d.nu = normal(investor, p.sigma_nu);
  return d;
}

double step_news(MarketState& st, const Coefficients& c, const NewsDraws& d) {
  if (d.arrived_eps) st.dbar += d.eps;
  if (d.arrived_nu) st.vbar += d.nu;
  double change = c.a * st.dbar + c.b * (st.vbar - st.price);
  st.price += change;
  ++st.t;
  return change;
}

double step_news(MarketState& st, const NewsParams& p, const Coefficients& c, Stream& speculator,
                 Stream& investor) {
  return step_news(st, c, sample_news(p, speculator, investor));
}

double step_trend(MarketState& st, const Coefficients& c, const std::vector<double>& weights,
                  double noise) {
  if (weights.size() != st.last_changes.size())
    throw std::invalid_argument("one weight per remembered change is required");
  double trend = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) trend += weights[i] * st.last_changes[i];
  double change = c.a * trend + noise;
  for (std::size_t i = st.last_changes.size(); i-- > 1;)
    st.last_changes[i] = st.last_changes[i - 1];
  st.last_changes[0] = change;
  st.price += change;
  ++st.t;
  return change;
}

double step_trend(MarketState& st, const TrendParams& p, const Coefficients& c, Stream& weights,
                  Stream& noise) {
  std::vector<double> w(p.k);
  for (std::size_t i = 0; i < p.k; ++i) w[i] = p.omega_dist.sample(weights);
  double e = normal(noise, p.noise_sigma);
  return step_trend(st, c, w, e);
}

SimSeries simulate(const RegimeConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  SimSeries out;
  out.config_label = cfg.label;
  out.seed = seed;
  const long long T = cfg.steps;
  out.prices.reserve(static_cast<std::size_t>(T) + 1);
  out.changes.reserve(static_cast<std::size_t>(T));
  out.returns.reserve(static_cast<std::size_t>(T));

  Stream coeffs(seed, Channel::coefficients);
  if (cfg.regime == Regime::news) {
    Stream speculator(seed, Channel::speculator_news);
    Stream investor(seed, Channel::investor_news);
    MarketState st = make_state(cfg.news);
    out.prices.push_back(st.price);
    out.values.reserve(static_cast<std::size_t>(T) + 1);
    out.dbars.reserve(static_cast<std::size_t>(T) + 1);
    out.values.push_back(st.vbar);
    out.dbars.push_back(st.dbar);
    for (long long t = 0; t < T; ++t) {
      Coefficients c = sample_coefficients(cfg.coefficients, coeffs);
      double prev = st.price;
      double change = step_news(st, cfg.news, c, speculator, investor);
      out.changes.push_back(change);
      out.prices.push_back(st.price);
      out.values.push_back(st.vbar);
      out.dbars.push_back(st.dbar);
      out.returns.push_back(change / prev);
    }
  } else {
    Stream weights(seed, Channel::trend_weights);
    Stream noise(seed, Channel::trend_noise);
    MarketState st = make_state(cfg.trend);
    out.prices.push_back(st.price);
    for (long long t = 0; t < T; ++t) {
      Coefficients c = sample_coefficients(cfg.coefficients, coeffs);
      double prev = st.price;
      double change = step_trend(st, cfg.trend, c, weights, noise);
      out.changes.push_back(change);
      out.prices.push_back(st.price);
      out.returns.push_back(change / prev);
    }
  }
  for (std::size_t i = 0; i < out.returns.size(); ++i) {
    if (!std::isfinite(out.returns[i])) {
      out.degenerate_step = static_cast<long long>(i) + 1;
      break;
    }
  }
  return out;
}

std::vector<double> returns_from_prices(const std::vector<double>& prices) {
  if (prices.size() < 2) throw std::invalid_argument("at least 2 prices are required");
  std::vector<double> r(prices.size() - 1);
  for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
    if (prices[i] == 0.0) {
      std::ostringstream msg;
      msg << "zero price at index " << i << " makes the next return undefined";
      throw std::invalid_argument(msg.str());
    }
    r[i] = (prices[i + 1] - prices[i]) / prices[i];
  }
  return r;
}

double micro_excess_demand(const std::vector<MicroAgent>& agents, double price) {
  double total = 0.0;
  for (const MicroAgent& a : agents) {
    if (a.kind == MicroAgent::Kind::speculator)
      total += a.coefficient * a.belief;
    else
      total += a.coefficient * (a.belief - price);
  }
  return total;
}

}  // namespace volcluster
