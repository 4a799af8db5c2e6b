#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace prsim {

/// Nonnegative page-value vector. A probability vector in the stochastic
/// schemes; unnormalized in the termination and asynchronous modes.
using RankVector = std::vector<double>;

inline double vec_sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

inline double l1_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::fabs(x);
  return s;
}

inline double l1_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

inline double linf_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::fabs(a[i] - b[i]));
  return s;
}

inline double sq_l2_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline bool is_probability_vector(std::span<const double> v, double tol = 1e-9) {
  for (double x : v)
    if (x < 0.0) return false;
  return std::fabs(vec_sum(v) - 1.0) <= tol;
}

inline RankVector uniform_probability(std::size_t n) {
  return RankVector(n, 1.0 / static_cast<double>(n));
}

}  // namespace prsim
