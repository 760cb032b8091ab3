#include "volcluster/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace volcluster {

namespace {

bool all_equal(const std::vector<double>& v) {
  for (double x : v)
    if (x != v[0]) return false;
  return true;
}

std::vector<double> sorted_positives(const std::vector<double>& series) {
  std::vector<double> x;
  x.reserve(series.size());
  for (double v : series)
    if (v > 0.0) x.push_back(v);
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace

double acf_band(std::size_t n) {
  if (n < 2) throw std::invalid_argument("acf band needs a sample of at least 2");
  return 1.96 / std::sqrt(static_cast<double>(n));
}

AcfResult acf(const std::vector<double>& series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (n < max_lag + 2) throw std::invalid_argument("max_lag too large for the series length");
  if (all_equal(series)) throw std::invalid_argument("zero-variance series");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  double den = 0.0;
  for (double v : series) den += (v - mean) * (v - mean);
  if (!(den > 0.0)) throw std::invalid_argument("zero-variance series");

  AcfResult out;
  out.n = n;
  out.band = acf_band(n);
  out.lags.resize(max_lag + 1);
  out.values.resize(max_lag + 1);
  out.lags[0] = 0;
  out.values[0] = 1.0;
  for (std::size_t h = 1; h <= max_lag; ++h) {
    double num = 0.0;
    for (std::size_t t = 0; t + h < n; ++t) num += (series[t] - mean) * (series[t + h] - mean);
    out.lags[h] = h;
    out.values[h] = num / den;
  }
  return out;
}

double kurtosis(const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n < 4) throw std::invalid_argument("kurtosis needs at least 4 observations");
  if (all_equal(series)) throw std::invalid_argument("zero-variance series");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m4 = 0.0;
  for (double v : series) {
    double c = v - mean;
    double c2 = c * c;
    m2 += c2;
    m4 += c2 * c2;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (!(m2 > 0.0)) throw std::invalid_argument("zero-variance series");
  return m4 / (m2 * m2);
}

TailCurve tail_survival(const std::vector<double>& series) {
  std::vector<double> x = sorted_positives(series);
  const std::size_t n = x.size();
  if (n < 2 || x.front() == x.back())
    throw std::invalid_argument("fewer than 2 distinct positive values");

  TailCurve curve;
  curve.n = n;
  curve.n_dropped = series.size() - n;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n && x[i + 1] == x[i]) continue;  // keep the last of a tie run
    curve.x.push_back(x[i]);
    // i+1 observations are <= x[i]; the largest value gets half a count so
    // the curve stays positive.
    curve.survival.push_back(i + 1 < n ? static_cast<double>(n - i - 1) / dn : 0.5 / dn);
  }
  return curve;
}

PowerLawFit fit_power_law(const std::vector<double>& series, std::size_t min_tail) {
  std::vector<double> x = sorted_positives(series);
  const std::size_t n = x.size();
  if (min_tail < 2) min_tail = 2;
  if (n < min_tail) throw std::invalid_argument("insufficient tail: fewer positive values than min_tail");
  if (x.front() == x.back()) throw std::invalid_argument("all values identical");

  std::vector<double> logx(n);
  for (std::size_t i = 0; i < n; ++i) logx[i] = std::log(x[i]);
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + logx[i];

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i + min_tail <= n; ++i)
    if (i == 0 || x[i] != x[i - 1]) candidates.push_back(i);
  if (candidates.size() > 1024) {
    std::vector<std::size_t> thin;
    thin.reserve(1024);
    const double span = static_cast<double>(candidates.size() - 1);
    for (std::size_t j = 0; j < 1024; ++j) {
      std::size_t pick = candidates[static_cast<std::size_t>(
          std::llround(span * static_cast<double>(j) / 1023.0))];
      if (thin.empty() || pick != thin.back()) thin.push_back(pick);
    }
    candidates = std::move(thin);
  }

  bool found = false;
  PowerLawFit best;
  for (std::size_t j : candidates) {
    const std::size_t m = n - j;
    const double dm = static_cast<double>(m);
    const double s = suffix[j] - dm * logx[j];
    if (!(s > 0.0)) continue;
    const double mu = dm / s;
    double ks = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double z = 1.0 - std::exp(-mu * (logx[j + i] - logx[j]));
      const double lo = std::abs(z - static_cast<double>(i) / dm);
      const double hi = std::abs(z - static_cast<double>(i + 1) / dm);
      ks = std::max(ks, std::max(lo, hi));
    }
    if (!found || ks < best.ks) {
      found = true;
      best.alpha = mu;
      best.xmin = x[j];
      best.ks = ks;
      best.n_tail = m;
    }
  }
  if (!found) throw std::invalid_argument("no usable tail cutoff");
  return best;
}

double hill_estimator(const std::vector<double>& series, std::size_t k) {
  std::vector<double> x = sorted_positives(series);
  const std::size_t n = x.size();
  if (k < 1 || k >= n) throw std::invalid_argument("k out of range for the positive sample");
  const double base = std::log(x[n - k - 1]);
  double denom = 0.0;
  for (std::size_t i = n - k; i < n; ++i) denom += std::log(x[i]) - base;
  if (!(denom > 0.0)) throw std::invalid_argument("ties make the Hill denominator zero");
  return static_cast<double>(k) / denom;
}

double ls_tail_slope(const TailCurve& curve, double xmin) {
  std::vector<double> u, v;
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    if (curve.x[i] >= xmin) {
      u.push_back(std::log(curve.x[i]));
      v.push_back(std::log(curve.survival[i]));
    }
  }
  if (u.size() < 3) throw std::invalid_argument("fewer than 3 curve points at or above xmin");
  double um = 0.0, vm = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    um += u[i];
    vm += v[i];
  }
  um /= static_cast<double>(u.size());
  vm /= static_cast<double>(u.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    sxx += (u[i] - um) * (u[i] - um);
    sxy += (u[i] - um) * (v[i] - vm);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("degenerate abscissae for the tail regression");
  return sxy / sxx;
}

}  // namespace volcluster
