#pragma once

#include <cstddef>
#include <vector>

namespace volcluster {

struct AcfResult {
  std::vector<std::size_t> lags;  // 0..max_lag
  std::vector<double> values;     // values[0] == 1 exactly
  std::size_t n = 0;              // sample length
  double band = 0.0;              // 1.96/sqrt(n), white-noise 95% band
};

// Biased estimator with the global mean and the global variance in the
// denominator, which keeps every value in [-1, 1].
AcfResult acf(const std::vector<double>& series, std::size_t max_lag);

// White-noise 95% band 1.96/sqrt(n).
double acf_band(std::size_t n);

// Pearson (non-excess) kurtosis m4/m2^2 with 1/n central moments.
double kurtosis(const std::vector<double>& series);

struct TailCurve {
  std::vector<double> x;          // distinct values, ascending
  std::vector<double> survival;   // P(X > x); the terminal point is 0.5/n
  std::size_t n = 0;              // positive observations used
  std::size_t n_dropped = 0;      // non-positive observations discarded
};

// Empirical survival curve of the positive part of the sample. The largest
// abscissa is assigned half an observation's weight instead of zero so the
// whole curve survives a log transform.
TailCurve tail_survival(const std::vector<double>& series);

struct PowerLawFit {
  double alpha = 0.0;       // tail exponent of the survival law P(X > x) ~ x^-alpha
  double xmin = 0.0;        // cutoff minimizing the KS distance
  double ks = 0.0;          // KS distance at the selected cutoff
  std::size_t n_tail = 0;   // observations >= xmin
};

// Continuous maximum-likelihood fit over the tail above each candidate
// cutoff, keeping the cutoff whose fitted law is closest to the empirical
// tail in KS distance. Candidates are the distinct observed values leaving
// at least min_tail points; when there are more than 1024 candidates an
// evenly spaced subset of 1024 is scanned.
PowerLawFit fit_power_law(const std::vector<double>& series, std::size_t min_tail = 50);

// Hill estimator on the top k order statistics of the positive part.
double hill_estimator(const std::vector<double>& series, std::size_t k);

// Ordinary least-squares slope of log survival against log x over the curve
// points with x >= xmin. Negative for a decaying tail; |slope| estimates the
// tail exponent.
double ls_tail_slope(const TailCurve& curve, double xmin);

}  // namespace volcluster
