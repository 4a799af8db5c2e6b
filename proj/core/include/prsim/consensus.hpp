#pragma once

#include <cstdint>
#include <vector>

#include "prsim/dense_matrix.hpp"
#include "prsim/trace.hpp"
#include "prsim/web_graph.hpp"

namespace prsim {

/// Row-sparse square matrix: rows_[i] holds (column, value) pairs.
struct SparseRowMatrix {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows;

  RankVector multiply(const RankVector& x) const;
  DenseMatrix to_dense() const;
};

/// The n communication-pattern matrices of the averaging consensus baseline.
/// Pattern i uses the edge subset made of all self-loops plus every edge
/// incident to agent i (in either direction); agent j averages the values it
/// receives, so each matrix is row-stochastic with positive diagonal and the
/// pattern edge sets jointly cover the whole graph.
struct ConsensusPattern {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<SparseRowMatrix> matrices;
};

/// Builds the pattern family. Throws ValidationError when the graph is not
/// strongly connected.
ConsensusPattern consensus_matrices(const WebGraph& g);

/// Iterates x(k+1) = A_theta(k) x(k) with theta uniform over the d patterns,
/// stopping when max(x) - min(x) <= tol or k = max_steps. The err columns of
/// the trace report disagreement (err_linf = max - min, err_l1 = total
/// absolute deviation from the mean). Deterministic per (seed, stream).
SimTrace simulate_consensus(const WebGraph& g, const RankVector& x0,
                            std::uint64_t seed, std::uint64_t max_steps, double tol,
                            std::uint64_t sample_every = 1, std::uint64_t stream = 0);

}  // namespace prsim
