#pragma once

#include <cstdint>

#include "prsim/dense_matrix.hpp"
#include "prsim/link_matrix.hpp"
#include "prsim/state.hpp"
#include "prsim/trace.hpp"

namespace prsim {

/// Rescaled damping for the simultaneous-update scheme:
/// m [1 - (1-alpha)^2] / (1 - m (1-alpha)^2). Equals m at alpha = 1.
double rescaled_damping_simul(double m, double alpha);

/// Dense distributed link matrix for an update pattern p:
///   (i,j) = a_ij           if p_i = 1 or p_j = 1,
///   (j,j) = 1 - sum_{h: p_h=1} a_hj   if p_j = 0,
///   0 otherwise.
/// Column-stochastic by construction. Verification use only (n <= 2000).
DenseMatrix pattern_matrix(const LinkMatrix& A, const UpdatePattern& p);

/// Closed-form average of the 2^n pattern matrices under i.i.d. Bernoulli
/// (alpha) flags: [1-(1-alpha)^2] A + (1-alpha)^2 I.
DenseMatrix average_pattern_matrix(const LinkMatrix& A, double alpha);

/// Brute-force average: enumerates all 2^n patterns and weights each by
/// alpha^(#flags) (1-alpha)^(n-#flags). Throws CapacityError for n > 12.
DenseMatrix average_pattern_matrix_enumerated(const LinkMatrix& A, double alpha);

/// Sum of all pattern matrices with exactly l initiators, in closed form:
/// A for l = n, nA for l = n-1, (C(n,l) - C(n-2,l)) A + C(n-2,l) I otherwise.
/// Binomials are computed in exact integer arithmetic; n <= 64.
DenseMatrix initiator_class_sum(const LinkMatrix& A, std::size_t l);

/// Exact binomial coefficient via Pascal's rule; throws CapacityError when
/// the value would not fit in 64 bits (kept exact up to n = 64).
std::uint64_t binomial(std::size_t n, std::size_t k);

/// One simultaneous-update step: x' = (1-mhat) A_p x + (mhat/n) 1, touching
/// only rows/columns of flagged pages plus diagonal corrections; increments k
/// and folds x' into the running average.
void step_simul(SimState& s, const LinkMatrix& A, const UpdatePattern& p, double mhat);

/// Runs the simultaneous-update scheme with a fresh Bernoulli(alpha) pattern
/// each step. Deterministic per (seed, stream).
SimTrace simulate_simul(const WebGraph& g, const SchemeParams& p,
                        std::uint64_t steps, std::uint64_t sample_every,
                        std::uint64_t stream = 0,
                        const RankVector* reference = nullptr);

SimTrace simulate_simul(const LinkMatrix& A, const SchemeParams& p,
                        std::uint64_t steps, std::uint64_t sample_every,
                        std::uint64_t stream, const RankVector& reference);

}  // namespace prsim
