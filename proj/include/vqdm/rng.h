#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vqdm {

// Deterministic random source. Distribution transforms are implemented here
// instead of via <random> distribution objects, whose output is
// implementation-defined; a given seed therefore yields the same stream on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  double normal(double mean = 0.0, double stddev = 1.0);

  // Index sampled proportionally to probs (assumed non-negative, summing
  // to ~1). Falls back to the last positive entry if rounding leaves the
  // cumulative sum short of the draw.
  std::size_t categorical(const std::vector<double>& probs);

  // Derived stream, decorrelated from this one.
  Rng fork();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace vqdm
