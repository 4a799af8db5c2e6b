#include "prsim/consensus.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "prsim/dist_single.hpp"
#include "prsim/errors.hpp"
#include "support.hpp"

namespace prsim::test {
namespace {

TEST(ConsensusMatrices, FourPageReferenceFamily) {
  const ConsensusPattern cp = consensus_matrices(web4());
  ASSERT_EQ(cp.d, 4u);
  const auto expected = web4_consensus_matrices();
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_LE(DenseMatrix::max_abs_diff(cp.matrices[i].to_dense(), expected[i]), 1e-15)
        << "pattern " << i;
}

TEST(ConsensusMatrices, TwoCycleAveragesEverything) {
  const ConsensusPattern cp = consensus_matrices(two_cycle());
  DenseMatrix expected(2, 2, 0.5);
  EXPECT_LE(DenseMatrix::max_abs_diff(cp.matrices[0].to_dense(), expected), 1e-15);
  EXPECT_LE(DenseMatrix::max_abs_diff(cp.matrices[1].to_dense(), expected), 1e-15);
}

TEST(ConsensusMatrices, RowStochasticWithPositiveDiagonal) {
  Rng rng(121, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.next_below(20);
    const WebGraph g = random_patched_graph(rng, n);
    ConsensusPattern cp;
    try {
      cp = consensus_matrices(g);
    } catch (const ValidationError&) {
      continue;  // random graph happened to not be strongly connected
    }
    for (const auto& M : cp.matrices) {
      const DenseMatrix D = M.to_dense();
      for (std::size_t r = 0; r < n; ++r) {
        EXPECT_NEAR(D.row_sum(r), 1.0, 1e-12);
        EXPECT_GT(D(r, r), 0.0);
      }
    }
  }
}

TEST(ConsensusMatrices, PatternsCoverEveryEdge) {
  const WebGraph g = web4();
  const ConsensusPattern cp = consensus_matrices(g);
  for (std::uint32_t src = 0; src < g.n; ++src)
    for (std::uint32_t dst : g.out_links[src]) {
      bool covered = false;
      for (const auto& M : cp.matrices)
        for (auto [col, v] : M.rows[dst])
          if (col == src && v > 0.0) covered = true;
      EXPECT_TRUE(covered) << src << "->" << dst;
    }
}

TEST(ConsensusMatrices, AveragePatternIsPrimitiveShaped) {
  // The uniform average of the family has positive diagonal and a positive
  // entry for every graph edge.
  const WebGraph g = web4();
  const ConsensusPattern cp = consensus_matrices(g);
  DenseMatrix avg(g.n, g.n);
  for (const auto& M : cp.matrices) avg += M.to_dense();
  avg *= 1.0 / static_cast<double>(cp.d);
  for (std::size_t r = 0; r < g.n; ++r) EXPECT_GT(avg(r, r), 0.0);
  for (std::uint32_t src = 0; src < g.n; ++src)
    for (std::uint32_t dst : g.out_links[src]) EXPECT_GT(avg(dst, src), 0.0);
}

TEST(ConsensusMatrices, RejectsDisconnectedGraphs) {
  // Two separate 2-cycles: strongly connected components do not cover V.
  const WebGraph g = make_web_graph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  EXPECT_THROW(consensus_matrices(g), ValidationError);
}

TEST(ConsensusMatrices, StochasticityOrientationContrast) {
  // Consensus averaging matrices are row-stochastic; the PageRank
  // distributed matrices are column-stochastic.
  const WebGraph g = web4();
  const LinkMatrix A = LinkMatrix::from_graph(g);
  const ConsensusPattern cp = consensus_matrices(g);
  const DenseMatrix C0 = cp.matrices[1].to_dense();
  const DenseMatrix P0 = single_update_matrix(A, 1);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_NEAR(C0.row_sum(r), 1.0, 1e-12);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_NEAR(P0.column_sum(c), 1.0, 1e-12);
  // ...and not the other way around for these particular matrices.
  EXPECT_GT(std::fabs(C0.column_sum(0) - 1.0), 1e-3);
  EXPECT_GT(std::fabs(P0.row_sum(0) - 1.0), 1e-3);
}

TEST(SimulateConsensus, ConstantStartAgreesImmediately) {
  const SimTrace t = simulate_consensus(web4(), {0.3, 0.3, 0.3, 0.3}, 1, 1000, 1e-12);
  EXPECT_TRUE(t.reached_tol);
  EXPECT_EQ(t.steps_run, 0u);
  EXPECT_EQ(t.samples.front().err_linf, 0.0);
}

TEST(SimulateConsensus, ReachesAgreementForManySeeds) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SimTrace t = simulate_consensus(web4(), {1, 0, 0, 0}, seed, 100000, 1e-8);
    EXPECT_TRUE(t.reached_tol) << "seed " << seed;
    EXPECT_EQ(t.range_violations, 0u);
  }
}

TEST(SimulateConsensus, LimitStaysInsideInitialRange) {
  Rng rng(5, 0);
  for (int trial = 0; trial < 10; ++trial) {
    RankVector x0(4);
    for (double& v : x0) v = 10.0 * rng.next_double() - 5.0;
    const double lo = *std::min_element(x0.begin(), x0.end());
    const double hi = *std::max_element(x0.begin(), x0.end());
    const SimTrace t = simulate_consensus(web4(), x0, trial, 200000, 1e-10);
    ASSERT_TRUE(t.reached_tol);
    for (double v : t.final_x) {
      EXPECT_GE(v, lo - 1e-9);
      EXPECT_LE(v, hi + 1e-9);
    }
  }
}

TEST(SimulateConsensus, DeterministicPerSeed) {
  const SimTrace a = simulate_consensus(web4(), {1, 0, 0, 0}, 9, 100000, 1e-9);
  const SimTrace b = simulate_consensus(web4(), {1, 0, 0, 0}, 9, 100000, 1e-9);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.final_x, b.final_x);
}

}  // namespace
}  // namespace prsim::test
