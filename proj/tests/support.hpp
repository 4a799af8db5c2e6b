#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "prsim/dense_matrix.hpp"
#include "prsim/errors.hpp"
#include "prsim/link_matrix.hpp"
#include "prsim/rng.hpp"
#include "prsim/web_graph.hpp"

namespace prsim::test {

// The four-page reference web (0-based ids):
// 0 -> 1; 1 -> 2,3; 2 -> 1,3; 3 -> 0,1,2.
inline const char* kWeb4Text = "n 4\n0 1\n1 2\n1 3\n2 1\n2 3\n3 0\n3 1\n3 2\n";

inline WebGraph web4() {
  std::istringstream in(kWeb4Text);
  return load_edge_list(in);
}

inline WebGraph two_cycle() {
  std::istringstream in("0 1\n1 0\n");
  return load_edge_list(in);
}

// Reference values of the four-page web, printed to three decimals.
inline RankVector web4_x_star() { return {0.119, 0.331, 0.260, 0.289}; }

inline DenseMatrix web4_link_dense() {
  DenseMatrix A(4, 4);
  const double t = 1.0 / 3.0;
  A(1, 0) = 1.0;
  A(2, 1) = 0.5;
  A(3, 1) = 0.5;
  A(1, 2) = 0.5;
  A(3, 2) = 0.5;
  A(0, 3) = t;
  A(1, 3) = t;
  A(2, 3) = t;
  return A;
}

// The four per-page distributed matrices of the reference web, page = 0..3.
inline std::vector<DenseMatrix> web4_single_update_matrices() {
  const double t = 1.0 / 3.0, tt = 2.0 / 3.0, h = 0.5;
  std::vector<DenseMatrix> out(4, DenseMatrix(4, 4));
  {
    DenseMatrix& M = out[0];
    M(0, 3) = t;
    M(1, 0) = 1.0;
    M(1, 1) = 1.0;
    M(2, 2) = 1.0;
    M(3, 3) = tt;
  }
  {
    DenseMatrix& M = out[1];
    M(1, 0) = 1.0;
    M(1, 2) = h;
    M(1, 3) = t;
    M(2, 1) = h;
    M(2, 2) = h;
    M(3, 1) = h;
    M(3, 3) = tt;
  }
  {
    DenseMatrix& M = out[2];
    M(0, 0) = 1.0;
    M(1, 1) = h;
    M(1, 2) = h;
    M(2, 1) = h;
    M(2, 3) = t;
    M(3, 2) = h;
    M(3, 3) = tt;
  }
  {
    DenseMatrix& M = out[3];
    M(0, 0) = 1.0;
    M(0, 3) = t;
    M(1, 1) = h;
    M(1, 3) = t;
    M(2, 2) = h;
    M(2, 3) = t;
    M(3, 1) = h;
    M(3, 2) = h;
  }
  return out;
}

// The four averaging-consensus pattern matrices of the reference web.
inline std::vector<DenseMatrix> web4_consensus_matrices() {
  const double h = 0.5, q = 0.25, t = 1.0 / 3.0;
  std::vector<DenseMatrix> out(4, DenseMatrix(4, 4));
  {
    DenseMatrix& M = out[0];
    M(0, 0) = h;
    M(0, 3) = h;
    M(1, 0) = h;
    M(1, 1) = h;
    M(2, 2) = 1.0;
    M(3, 3) = 1.0;
  }
  {
    DenseMatrix& M = out[1];
    M(0, 0) = 1.0;
    M(1, 0) = q;
    M(1, 1) = q;
    M(1, 2) = q;
    M(1, 3) = q;
    M(2, 1) = h;
    M(2, 2) = h;
    M(3, 1) = h;
    M(3, 3) = h;
  }
  {
    DenseMatrix& M = out[2];
    M(0, 0) = 1.0;
    M(1, 1) = h;
    M(1, 2) = h;
    M(2, 1) = t;
    M(2, 2) = t;
    M(2, 3) = t;
    M(3, 2) = h;
    M(3, 3) = h;
  }
  {
    DenseMatrix& M = out[3];
    M(0, 0) = h;
    M(0, 3) = h;
    M(1, 1) = h;
    M(1, 3) = h;
    M(2, 2) = h;
    M(2, 3) = h;
    M(3, 1) = t;
    M(3, 2) = t;
    M(3, 3) = t;
  }
  return out;
}

// Dense linear solve with partial pivoting; the tests' independent oracle
// for fixed-point systems.
inline RankVector gauss_solve(DenseMatrix A, RankVector b) {
  const std::size_t n = A.rows();
  if (A.cols() != n || b.size() != n) throw ValidationError("gauss_solve shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(A(r, col)) > std::fabs(A(pivot, col))) pivot = r;
    if (std::fabs(A(pivot, col)) < 1e-14) throw ValidationError("singular system");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(A(pivot, c), A(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = A(r, col) / A(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) A(r, c) -= f * A(col, c);
      b[r] -= f * b[col];
    }
  }
  RankVector x(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double s = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) s -= A(ri, c) * x[c];
    x[ri] = s / A(ri, ri);
  }
  return x;
}

// Small random graph with every page keeping at least one out-link, then
// patched. Deterministic in the caller's generator.
inline WebGraph random_patched_graph(Rng& rng, std::size_t n, std::size_t max_deg = 3) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  const std::size_t cap = std::min(n - 1, max_deg);
  for (std::uint32_t src = 0; src < n; ++src) {
    const std::size_t deg = 1 + rng.next_below(cap);
    std::size_t added = 0, guard = 0;
    while (added < deg && guard < 50 * n) {
      const auto dst = static_cast<std::uint32_t>(rng.next_below(n));
      ++guard;
      if (dst == src) continue;
      edges.emplace_back(src, dst);
      ++added;
    }
  }
  return patch_dangling(make_web_graph(n, edges));
}

// Random dense column-stochastic matrix with strictly positive entries.
inline DenseMatrix random_column_stochastic(Rng& rng, std::size_t n) {
  DenseMatrix P(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      P(i, j) = rng.next_double() + 0.01;
      sum += P(i, j);
    }
    for (std::size_t i = 0; i < n; ++i) P(i, j) /= sum;
  }
  return P;
}

// Dense damped matrix M = (1-m)A + (m/n)S.
inline DenseMatrix google_dense(const LinkMatrix& A, double m) {
  DenseMatrix M = DenseMatrix::from_link_matrix(A);
  M *= 1.0 - m;
  const double teleport = m / static_cast<double>(A.size());
  for (double& v : M.data()) v += teleport;
  return M;
}

// Reference implementation of the stability test: a direct scan over the
// full list of prior averages.
inline bool naive_window_check(const std::vector<double>& prior, double y_now,
                               double delta, std::size_t ns) {
  if (prior.size() < ns) return false;
  for (std::size_t l = 1; l <= ns; ++l)
    if (std::fabs(y_now - prior[prior.size() - l]) > delta * y_now) return false;
  return true;
}

// Least-squares slope of (k, v) pairs.
inline double regression_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace prsim::test
