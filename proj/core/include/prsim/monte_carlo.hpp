#pragma once

#include <cstdint>
#include <vector>

#include "prsim/state.hpp"
#include "prsim/termination.hpp"
#include "prsim/trace.hpp"
#include "prsim/web_graph.hpp"

namespace prsim {

enum class Scheme { single_update, simultaneous };

/// Per-k empirical mean of ||y(k) - x*||^2 over independent seeded runs.
struct MCSummary {
  std::vector<std::uint64_t> ks;
  std::vector<double> mean_sq_err;
  std::size_t runs = 0;
  std::uint64_t seed = 0;
  double mhat = 0.0;
};

/// Runs `runs` independent simulations (run r uses stream r of the base
/// seed) and averages the squared l2 error of the time average at every
/// sampled k. Runs execute concurrently; the reduction is performed in run
/// order, so the result does not depend on the thread count.
MCSummary mc_mean_square(Scheme scheme, const WebGraph& g, const SchemeParams& p,
                         std::size_t runs, std::uint64_t steps,
                         std::uint64_t sample_every, unsigned threads = 0);

struct ScaledExperimentReport {
  SimTrace trace;
  double value_sum_final = 0.0;    // sum of y at the final step
  double linf_at_reference = 0.0;  // ||y - x*||_inf at k = 500
  double linf_final = 0.0;
  std::size_t pages_terminated = 0;
  std::size_t n = 0;
};

/// Scaled large-web experiment: a 1000-page random web with 10 hub pages and
/// out-degrees in [2, 333], run through the terminating scheme with
/// alpha = 0.01, delta = 0.01, ns = 800 for 8000 steps from a random
/// probability vector. Deterministic per seed_base.
ScaledExperimentReport run_scaled_experiment(std::uint64_t seed_base);

}  // namespace prsim
