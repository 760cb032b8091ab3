#pragma once

#include <cstdint>

namespace volcluster {

// Counter-based generator: a 64-bit counter stepped by the golden-ratio
// increment and passed through the SplitMix64 finalizer. Every (seed,
// channel) pair owns an independent sub-stream, so the regimes consume
// draws from separate sequences and adding a draw to one channel never
// shifts another.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Domain tag separating this library's streams from any other user of the
// same construction; see stream_key below.
inline constexpr std::uint64_t kDomain = 0x4F33B9584A3C416Full;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

enum class Channel : std::uint64_t {
  coefficients = 0,
  speculator_news = 1,
  investor_news = 2,
  trend_weights = 3,
  trend_noise = 4,
};

constexpr std::uint64_t stream_key(std::uint64_t seed, Channel channel) {
  return mix64(mix64(seed) + static_cast<std::uint64_t>(channel) * kGolden + kDomain);
}

class Stream {
 public:
  Stream(std::uint64_t seed, Channel channel) : counter_(stream_key(seed, channel)) {}

  std::uint64_t next_u64() {
    counter_ += kGolden;
    return mix64(counter_);
  }

  // Uniform on the open interval (0,1); the offset keeps 0 and 1 unreachable,
  // so log(unit()) is always finite.
  double unit() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53; }

 private:
  std::uint64_t counter_;
};

}  // namespace volcluster
