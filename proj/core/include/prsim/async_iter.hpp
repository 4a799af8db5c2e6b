#pragma once

#include <cstdint>

#include "prsim/link_matrix.hpp"
#include "prsim/state.hpp"
#include "prsim/trace.hpp"

namespace prsim {

/// One randomized asynchronous power step: every flagged page recomputes its
/// own row of the power iteration, x'_i = (1-m)(A x)_i + m/n; unflagged
/// pages hold their values. No time average is involved; the raw state
/// converges. Advances k, leaves y untouched.
void step_async(SimState& s, const LinkMatrix& A, const UpdatePattern& p, double m);

/// Runs the asynchronous iteration with fresh Bernoulli(alpha) patterns until
/// ||x - x*||_inf <= tol or k = max_steps (the latter is reported in the
/// trace, not an error). Deterministic per (seed, stream).
SimTrace simulate_async(const WebGraph& g, const SchemeParams& p,
                        std::uint64_t max_steps, double tol,
                        std::uint64_t stream = 0,
                        const RankVector* reference = nullptr);

SimTrace simulate_async(const LinkMatrix& A, const SchemeParams& p,
                        std::uint64_t max_steps, double tol, std::uint64_t stream,
                        const RankVector& reference);

}  // namespace prsim
