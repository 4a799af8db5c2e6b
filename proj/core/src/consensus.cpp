#include "prsim/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "prsim/errors.hpp"
#include "prsim/rng.hpp"

namespace prsim {

RankVector SparseRowMatrix::multiply(const RankVector& x) const {
  RankVector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (auto [j, v] : rows[i]) s += v * x[j];
    out[i] = s;
  }
  return out;
}

DenseMatrix SparseRowMatrix::to_dense() const {
  DenseMatrix D(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto [j, v] : rows[i]) D(i, j) += v;
  return D;
}

namespace {

bool covers_all(const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t n) {
  std::vector<std::uint8_t> seen(n, 0);
  std::queue<std::uint32_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop();
    for (std::uint32_t v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

bool strongly_connected(const WebGraph& g) {
  return covers_all(g.out_links, g.n) && covers_all(g.in_links, g.n);
}

}  // namespace

ConsensusPattern consensus_matrices(const WebGraph& g) {
  if (!strongly_connected(g))
    throw ValidationError("consensus patterns need a strongly connected graph");

  // Pattern i: every self-loop plus the edges incident to agent i. Agent j
  // then averages over the sources transmitting to it under that pattern:
  // agent i averages itself with all its in-neighbors, an out-neighbor j of
  // i averages itself with i, everyone else keeps its value.
  ConsensusPattern cp;
  cp.n = g.n;
  cp.d = g.n;
  cp.matrices.resize(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i) {
    SparseRowMatrix& M = cp.matrices[i];
    M.n = g.n;
    M.rows.assign(g.n, {});
    for (std::uint32_t j = 0; j < g.n; ++j) {
      if (j == i) {
        const double w = 1.0 / static_cast<double>(1 + g.in_links[i].size());
        M.rows[j].emplace_back(j, w);
        for (std::uint32_t src : g.in_links[i]) M.rows[j].emplace_back(src, w);
      } else if (g.has_edge(i, j)) {
        M.rows[j].emplace_back(j, 0.5);
        M.rows[j].emplace_back(i, 0.5);
      } else {
        M.rows[j].emplace_back(j, 1.0);
      }
    }
  }
  return cp;
}

SimTrace simulate_consensus(const WebGraph& g, const RankVector& x0, std::uint64_t seed,
                            std::uint64_t max_steps, double tol,
                            std::uint64_t sample_every, std::uint64_t stream) {
  if (x0.size() != g.n) throw ValidationError("initial vector length mismatch");
  if (tol < 0.0) throw ValidationError("tolerance must be nonnegative");
  if (sample_every == 0) throw ValidationError("sample_every must be >= 1");
  const ConsensusPattern cp = consensus_matrices(g);

  Rng rng(seed, stream);
  RankVector x = x0;
  std::uint64_t k = 0;

  SimTrace t;
  t.meta = {"consensus",  g.n, 0.0, 0.0,    0.0,       std::nullopt,
            std::nullopt, seed, stream, max_steps, sample_every};

  auto disagreement = [](const RankVector& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return std::pair<double, double>(*lo, *hi);
  };

  auto record = [&](double lo, double hi) {
    TraceSample row;
    row.k = k;
    const double mean = vec_sum(x) / static_cast<double>(x.size());
    double dev = 0.0;
    for (double v : x) dev += std::fabs(v - mean);
    row.err_l1 = dev;
    row.err_linf = hi - lo;
    row.sum = vec_sum(x);
    t.samples.push_back(row);
    t.x_samples.push_back(x);
  };

  auto [lo, hi] = disagreement(x);
  record(lo, hi);
  while (k < max_steps && hi - lo > tol) {
    const auto theta = static_cast<std::uint32_t>(rng.next_below(cp.d));
    x = cp.matrices[theta].multiply(x);
    ++k;
    const auto [nlo, nhi] = disagreement(x);
    // Averaging can only shrink the value range; count any numeric breach.
    if (nlo < lo - 1e-12 || nhi > hi + 1e-12) ++t.range_violations;
    lo = nlo;
    hi = nhi;
    if (k % sample_every == 0 && hi - lo > tol) record(lo, hi);
  }
  if (t.samples.back().k != k) record(lo, hi);
  t.reached_tol = hi - lo <= tol;
  t.final_x = x;
  t.final_y = x;
  t.steps_run = k;
  return t;
}

}  // namespace prsim
