#pragma once

#include <cstdint>
#include <vector>

#include "prsim/rng.hpp"
#include "prsim/vec.hpp"

namespace prsim {

/// Parameters shared by the randomized schemes. The rescaled damping is
/// derived per scheme (see rescaled_damping_single / rescaled_damping_simul).
struct SchemeParams {
  double m = 0.15;      // damping factor
  double alpha = 1.0;   // per-page update probability (simultaneous schemes)
  std::uint64_t seed = 0;
};

/// One run's mutable state: step counter, current values x, running time
/// average y, and the run's deterministic generator. A SimState is owned by
/// exactly one run; concurrent runs share only the immutable graph.
struct SimState {
  std::uint64_t k = 0;
  RankVector x;
  RankVector y;
  Rng rng;
  RankVector scratch;  // step buffer, same length as x

  static SimState from_initial(RankVector x0, Rng rng);

  /// Folds the freshly computed x into the running average:
  /// y <- (k_new * y + x) / (k_new + 1) with k_new = k + 1.
  void push_average();
};

/// Bernoulli update flags for one step: flags[i] = 1 iff page i initiates.
struct UpdatePattern {
  std::vector<std::uint8_t> flags;
  std::vector<std::uint32_t> initiators;

  explicit UpdatePattern(std::size_t n) : flags(n, 0) {}

  /// Draws one variate per page in page-id order (the fixed consumption
  /// order that seeded reproducibility relies on).
  void sample(Rng& rng, double alpha);


  void set_all();
  void set_none();
  void set_single(std::uint32_t page);

  std::size_t size() const { return flags.size(); }
};

}  // namespace prsim
