#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prsim/vec.hpp"
#include "prsim/web_graph.hpp"

namespace prsim {

/// Sparse column-stochastic hyperlink matrix with zero diagonal.
/// Column j holds the value 1/outdeg(j) at every out-neighbor row of j.
/// Immutable after construction.
class LinkMatrix {
 public:
  static LinkMatrix from_graph(const WebGraph& g);

  std::size_t size() const { return n_; }

  /// Rows with a nonzero entry in column j (the out-neighbors of page j).
  std::span<const std::uint32_t> column_rows(std::uint32_t j) const {
    return col_rows_[j];
  }
  /// The common value 1/outdeg(j) of all entries in column j.
  double column_value(std::uint32_t j) const { return col_value_[j]; }

  /// Columns with a nonzero entry in row i (the in-neighbors of page i).
  std::span<const std::uint32_t> row_cols(std::uint32_t i) const {
    return row_cols_[i];
  }

  double entry(std::uint32_t i, std::uint32_t j) const;

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> out) const;
  RankVector multiply(const RankVector& x) const;

  /// Row i of A x, i.e. the weighted sum of x over the in-neighbors of i.
  double row_product(std::uint32_t i, std::span<const double> x) const {
    double s = 0.0;
    for (std::uint32_t j : row_cols_[i]) s += col_value_[j] * x[j];
    return s;
  }

 private:
  LinkMatrix() = default;

  std::size_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<double> col_value_;
};

/// Applies the dense damped matrix M = (1-m)A + (m/n)S to x without
/// materializing M or S; the action of S is (sum of x) * ones.
RankVector apply_google(const LinkMatrix& A, double m, const RankVector& x);

}  // namespace prsim
