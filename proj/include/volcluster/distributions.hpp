#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "volcluster/rng.hpp"

namespace volcluster {

inline bool bernoulli(Stream& s, double p) { return s.unit() < p; }

inline double exponential(Stream& s, double mean) { return -mean * std::log(s.unit()); }

// Box-Muller; consumes exactly two uniforms per call so replay stays aligned.
inline double normal(Stream& s, double sigma) {
  double u1 = s.unit();
  double u2 = s.unit();
  return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Knuth product method. Means above 60 are split off in chunks first so the
// running product stays away from the underflow floor.
inline long long poisson(Stream& s, double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson: negative mean");
  long long total = 0;
  while (mean > 60.0) {
    total += poisson(s, 30.0);
    mean -= 30.0;
  }
  double limit = std::exp(-mean);
  double prod = s.unit();
  while (prod > limit) {
    ++total;
    prod *= s.unit();
  }
  return total;
}

struct ScalarDist {
  enum class Kind { exponential, degenerate };
  Kind kind = Kind::degenerate;
  double param = 0.0;  // exponential mean, or the degenerate value

  static ScalarDist exponential_mean(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("exponential distribution needs mean > 0");
    return {Kind::exponential, mean};
  }
  static ScalarDist degenerate_value(double value) { return {Kind::degenerate, value}; }

  double sample(Stream& s) const {
    return kind == Kind::exponential ? exponential(s, param) : param;
  }
  double mean() const { return param; }
  bool operator==(const ScalarDist&) const = default;
};

struct IntDist {
  enum class Kind { poisson, degenerate };
  Kind kind = Kind::degenerate;
  double mean = 0.0;    // poisson
  long long value = 0;  // degenerate

  static IntDist poisson_mean(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson distribution needs mean >= 0");
    IntDist d;
    d.kind = Kind::poisson;
    d.mean = mean;
    return d;
  }
  static IntDist degenerate_count(long long value) {
    if (value < 0) throw std::invalid_argument("degenerate count must be nonnegative");
    IntDist d;
    d.value = value;
    return d;
  }

  long long sample(Stream& s) const {
    return kind == Kind::poisson ? poisson(s, mean) : value;
  }
  bool operator==(const IntDist&) const = default;
};

}  // namespace volcluster
