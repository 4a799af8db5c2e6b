#include "prsim/dense_matrix.hpp"

#include <cmath>

#include "prsim/errors.hpp"

namespace prsim {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

DenseMatrix DenseMatrix::from_link_matrix(const LinkMatrix& A) {
  const std::size_t n = A.size();
  DenseMatrix D(n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const double v = A.column_value(j);
    for (std::uint32_t i : A.column_rows(j)) D(i, j) = v;
  }
  return D;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

RankVector DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw ValidationError("vector length mismatch in multiply");
  RankVector out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    const double* row = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
    out[i] = s;
  }
  return out;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix shape mismatch in multiply");
  DenseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      const double* brow = other.data_.data() + k * other.cols_;
      double* orow = out.data_.data() + i * other.cols_;
      for (std::size_t j = 0; j < other.cols_; ++j) orow[j] += a * brow[j];
    }
  }
  return out;
}

double DenseMatrix::column_sum(std::size_t j) const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

double DenseMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

double DenseMatrix::norm_l1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::fabs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ValidationError("matrix shape mismatch in max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    d = std::max(d, std::fabs(a.data_[i] - b.data_[i]));
  return d;
}

DenseMatrix affine_combination(double a, const DenseMatrix& X, double b) {
  DenseMatrix out = X;
  out *= a;
  if (b != 0.0) {
    if (X.rows() != X.cols())
      throw ValidationError("identity term needs a square matrix");
    for (std::size_t i = 0; i < X.rows(); ++i) out(i, i) += b;
  }
  return out;
}

}  // namespace prsim
