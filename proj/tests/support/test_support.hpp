#pragma once

// Seeded generators and tolerance helpers shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace econthermo::testing {

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), std::abs(got));
  return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Log-uniform on [lo, hi].
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  int pick(std::initializer_list<int> choices) {
    std::uniform_int_distribution<std::size_t> d(0, choices.size() - 1);
    return *(choices.begin() + d(rng_));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace econthermo::testing
