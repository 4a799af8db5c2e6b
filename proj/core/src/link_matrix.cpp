#include "prsim/link_matrix.hpp"

#include <algorithm>

#include "prsim/errors.hpp"

namespace prsim {

LinkMatrix LinkMatrix::from_graph(const WebGraph& g) {
  if (auto dangling = dangling_pages(g); !dangling.empty())
    throw ValidationError("graph has " + std::to_string(dangling.size()) +
                          " dangling page(s) (first: " + std::to_string(dangling[0]) +
                          "); apply the dangling patch first");
  LinkMatrix A;
  A.n_ = g.n;
  A.col_rows_ = g.out_links;
  A.row_cols_ = g.in_links;
  A.col_value_.resize(g.n);
  for (std::uint32_t j = 0; j < g.n; ++j)
    A.col_value_[j] = 1.0 / static_cast<double>(g.out_links[j].size());
  return A;
}

double LinkMatrix::entry(std::uint32_t i, std::uint32_t j) const {
  const auto& rows = col_rows_[j];
  return std::binary_search(rows.begin(), rows.end(), i) ? col_value_[j] : 0.0;
}

void LinkMatrix::multiply(std::span<const double> x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::uint32_t j = 0; j < n_; ++j) {
    const double v = col_value_[j] * x[j];
    for (std::uint32_t i : col_rows_[j]) out[i] += v;
  }
}

RankVector LinkMatrix::multiply(const RankVector& x) const {
  RankVector out(n_);
  multiply(x, out);
  return out;
}

RankVector apply_google(const LinkMatrix& A, double m, const RankVector& x) {
  if (x.size() != A.size())
    throw ValidationError("vector length does not match matrix dimension");
  RankVector out = A.multiply(x);
  const double teleport = m / static_cast<double>(A.size()) * vec_sum(x);
  for (double& v : out) v = (1.0 - m) * v + teleport;
  return out;
}

}  // namespace prsim
