#include "vqdm/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vqdm {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());  // full range
  return lo + static_cast<std::int64_t>(engine_() % range);
}

double Rng::normal(double mean, double stddev) {
  if (have_spare_) {
    have_spare_ = false;
    return mean + stddev * spare_;
  }
  // Box-Muller; 1-u keeps the log argument strictly positive.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return mean + stddev * r * std::cos(theta);
}

std::size_t Rng::categorical(const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("categorical: empty distribution");
  const double u = uniform();
  double acc = 0.0;
  std::size_t last_positive = 0;
  bool any_positive = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) {
      last_positive = i;
      any_positive = true;
    }
    acc += probs[i];
    if (u < acc) return i;
  }
  if (!any_positive) throw std::invalid_argument("categorical: all-zero distribution");
  return last_positive;
}

Rng Rng::fork() {
  const std::uint64_t a = engine_();
  const std::uint64_t b = engine_();
  return Rng(a ^ (b * 0x9e3779b97f4a7c15ULL));
}

}  // namespace vqdm
