#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prsim/link_matrix.hpp"
#include "prsim/vec.hpp"

namespace prsim {

/// Small row-major dense matrix. Verification tool for the matrix identities;
/// the simulation kernels never build dense matrices.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_link_matrix(const LinkMatrix& A);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator*=(double s);

  RankVector multiply(std::span<const double> x) const;
  DenseMatrix multiply(const DenseMatrix& other) const;

  double column_sum(std::size_t j) const;
  double row_sum(std::size_t i) const;

  /// Largest absolute column sum.
  double norm_l1() const;
  /// Largest entrywise |a - b|; matrices must have equal shape.
  static double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// a*X + b*I, shapes must be square for b != 0.
DenseMatrix affine_combination(double a, const DenseMatrix& X, double b);

}  // namespace prsim
