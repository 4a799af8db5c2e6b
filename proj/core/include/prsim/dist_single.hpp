#pragma once

#include <cstdint>

#include "prsim/dense_matrix.hpp"
#include "prsim/link_matrix.hpp"
#include "prsim/state.hpp"
#include "prsim/trace.hpp"

namespace prsim {

/// Rescaled damping for the single-update scheme: 2m / (n - m(n-2)).
/// Strictly below m for n > 2, equal to m at n = 2.
double rescaled_damping_single(double m, std::size_t n);

/// Dense distributed link matrix for initiator `page`: its row and column
/// copy A, the other diagonal entries are 1 - a(page, j), everything else is
/// zero. Column-stochastic. Verification use only (n <= 2000).
DenseMatrix single_update_matrix(const LinkMatrix& A, std::uint32_t page);

/// (1/n) sum of the n single-update matrices, enumerated. Verifies the
/// closed form (2/n)A + ((n-2)/n)I to 1e-12 and throws ConsistencyError on
/// mismatch. n <= 2000.
DenseMatrix average_update_matrix(const LinkMatrix& A);

/// One update step by `page`: x' = (1-mhat) A_page x + (mhat/n) 1, computed
/// in O(n + deg(page)); increments k and folds x' into the running average.
void step_single(SimState& s, const LinkMatrix& A, std::uint32_t page, double mhat);

/// Runs the single-update scheme for `steps` steps with the initiating page
/// drawn uniformly at random each step. Deterministic per (seed, stream).
/// `reference` is the PageRank vector used for the error columns; when null
/// it is computed internally by the power method at tolerance 1e-12.
SimTrace simulate_single(const WebGraph& g, const SchemeParams& p,
                         std::uint64_t steps, std::uint64_t sample_every,
                         std::uint64_t stream = 0,
                         const RankVector* reference = nullptr);

SimTrace simulate_single(const LinkMatrix& A, const SchemeParams& p,
                         std::uint64_t steps, std::uint64_t sample_every,
                         std::uint64_t stream, const RankVector& reference);

}  // namespace prsim
