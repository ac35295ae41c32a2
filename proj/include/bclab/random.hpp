#pragma once

#include <cstdint>

#include "bclab/graph.hpp"

namespace bclab {

/// SplitMix64 (Steele, Lea, Flood 2014). Output i is mix(seed + (i+1) * 0x9E3779B97F4A7C15)
/// with the standard 30/27/31 xor-shift-multiply finalizer. Platform independent.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }
  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Seed of trial `trial` in an experiment seeded with `seed`. Injective in trial for fixed seed.
constexpr std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64::mix(seed + (trial + 1) * SplitMix64::kGamma);
}

struct GnpParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// One SplitMix64 draw per pair (u, v), u < v, row-major; edge iff next_unit() < p.
Graph gnp_sample(const GnpParams& params);

}  // namespace bclab
