#pragma once

#include <cassert>
#include <cstdint>

namespace prsim {

/// Deterministic splitmix64 generator with stream splitting.
///
/// Simulations are reproduced bit-for-bit from (seed, stream). Monte Carlo
/// batches give each run its own stream index so runs are independent yet
/// replayable in isolation. The generator is fully specified here and does
/// not depend on libstdc++ distribution internals.
class Rng {
 public:
  Rng() : Rng(0, 0) {}

  Rng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(mix(seed + kGamma) ^ mix(stream * kGamma + 1))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) without modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    assert(lo <= hi);
    return lo + next_below(hi - lo + 1);
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace prsim
