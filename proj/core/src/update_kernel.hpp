#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>

#include "prsim/link_matrix.hpp"
#include "prsim/state.hpp"
#include "prsim/trace.hpp"

namespace prsim::detail {

// out = A_p x for the distributed pattern matrix: flagged rows take their
// full row of A; an unflagged row keeps x_i, gains the flagged-column
// contributions, and loses the diagonal depletion toward flagged pages.
// Touches O(n + total degree of the flagged pages).
inline void pattern_product(const LinkMatrix& A, const UpdatePattern& p,
                            std::span<const double> x, std::span<double> out) {
  std::copy(x.begin(), x.end(), out.begin());
  for (std::uint32_t f : p.initiators) out[f] = A.row_product(f, x);
  for (std::uint32_t f : p.initiators) {
    const double xv = A.column_value(f) * x[f];
    for (std::uint32_t o : A.column_rows(f))
      if (!p.flags[o]) out[o] += xv;
    for (std::uint32_t j : A.row_cols(f))
      if (!p.flags[j]) out[j] -= A.column_value(j) * x[j];
  }
}

// Single-initiator special case; out-neighbors and in-neighbors of the
// initiating page never include the page itself (zero diagonal).
inline void single_product(const LinkMatrix& A, std::uint32_t page,
                           std::span<const double> x, std::span<double> out) {
  std::copy(x.begin(), x.end(), out.begin());
  out[page] = A.row_product(page, x);
  const double xv = A.column_value(page) * x[page];
  for (std::uint32_t o : A.column_rows(page)) out[o] += xv;
  for (std::uint32_t j : A.row_cols(page)) out[j] -= A.column_value(j) * x[j];
}

inline void damped_update(std::span<const double> prod, double mhat,
                          std::span<double> x_out) {
  const double teleport = mhat / static_cast<double>(prod.size());
  const double keep = 1.0 - mhat;
  for (std::size_t i = 0; i < prod.size(); ++i) x_out[i] = keep * prod[i] + teleport;
}

// Appends one sampled row measuring the time average y against the reference.
inline void record_y_sample(SimTrace& t, const SimState& s, const RankVector& ref,
                            std::optional<double> bound, bool store_states) {
  TraceSample row;
  row.k = s.k;
  row.err_l1 = l1_distance(s.y, ref);
  row.err_linf = linf_distance(s.y, ref);
  row.sum = vec_sum(s.y);
  row.ms_bound = bound;
  t.samples.push_back(row);
  t.sq_errors.push_back(sq_l2_distance(s.y, ref));
  if (store_states) {
    t.x_samples.push_back(s.x);
    t.y_samples.push_back(s.y);
  }
}

}  // namespace prsim::detail
