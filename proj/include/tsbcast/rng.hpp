#pragma once

#include <cstdint>
#include <random>

namespace tsbcast {

// Session-local random stream. Every stochastic component draws from one of
// these; two runs with the same seed and call sequence produce identical
// results on a given build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  double normal(double mean, double stddev) {
    if (stddev <= 0.0) return mean;
    return std::normal_distribution<double>(mean, stddev)(eng_);
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return std::bernoulli_distribution(p)(eng_);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tsbcast
