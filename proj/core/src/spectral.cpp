#include "prsim/spectral.hpp"

#include <cmath>

#include "prsim/dense_matrix.hpp"
#include "prsim/errors.hpp"

namespace prsim {

PowerResult power_method(const LinkMatrix& A, double m, const RankVector& x0,
                         double tol, std::size_t max_iter) {
  if (tol <= 0.0) throw ValidationError("power method tolerance must be positive");
  if (m <= 0.0 || m >= 1.0) throw ValidationError("damping must lie in (0,1)");
  if (x0.size() != A.size()) throw ValidationError("initial vector length mismatch");
  if (!is_probability_vector(x0))
    throw ValidationError("initial vector must be a probability vector");

  RankVector x = x0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    RankVector next = apply_google(A, m, x);
    const double step = l1_distance(next, x);
    x = std::move(next);
    if (step <= tol) {
      PowerResult r;
      r.residual = l1_distance(apply_google(A, m, x), x);
      r.x_star = std::move(x);
      r.iterations = it;
      return r;
    }
  }
  throw ConvergenceError("power method did not reach tolerance", x, max_iter);
}

PowerResult power_method(const LinkMatrix& A, double m, double tol, std::size_t max_iter) {
  return power_method(A, m, uniform_probability(A.size()), tol, max_iter);
}

double second_eigenvalue_modulus(const LinkMatrix& A, double m,
                                 const RankVector& x_star, double tol) {
  const std::size_t n = A.size();
  if (n > 200) throw ValidationError("second_eigenvalue_modulus is a dense tool for n <= 200");
  if (tol <= 0.0) throw ValidationError("tolerance must be positive");

  // Deflate: B = M - x* 1^T removes the unit eigenvalue exactly because the
  // left eigenvector of a column-stochastic M for eigenvalue 1 is 1^T.
  DenseMatrix B = affine_combination(1.0 - m, DenseMatrix::from_link_matrix(A), 0.0);
  const double teleport = m / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) += teleport - x_star[i];

  // Normalized repeated squaring: after s squarings,
  // rho(B) ~ ||B^(2^s)||^(1/2^s), with polynomial factors killed by the
  // doubling exponent. Handles complex eigenvalue pairs, unlike ratio
  // estimates from a single power-iteration vector.
  double log_carried = 0.0;  // log of the normalization factors folded into B
  double exponent = 1.0;     // power of the original B represented
  double prev = -1.0;
  constexpr std::size_t kMaxSquarings = 64;
  for (std::size_t s = 0; s < kMaxSquarings; ++s) {
    const double norm = B.norm_l1();
    if (norm == 0.0) return 0.0;  // nilpotent leftovers: spectrum is {0}
    const double log_power_norm = log_carried + std::log(norm);
    const double estimate = std::exp(log_power_norm / exponent);
    if (prev >= 0.0 && std::fabs(estimate - prev) <= 0.5 * tol) return estimate;
    prev = estimate;

    DenseMatrix scaled = B;
    scaled *= 1.0 / norm;
    B = scaled.multiply(scaled);
    log_carried = 2.0 * log_power_norm;
    exponent *= 2.0;
  }
  throw ConvergenceError("second-eigenvalue estimate did not stabilize", {prev}, kMaxSquarings);
}

double average_convergence_rate_bound(double m, double alpha) {
  if (m <= 0.0 || m >= 1.0) throw ValidationError("damping must lie in (0,1)");
  if (alpha <= 0.0 || alpha > 1.0) throw ValidationError("alpha must lie in (0,1]");
  const double q = (1.0 - alpha) * (1.0 - alpha);
  return (1.0 - m) / (1.0 - m * q);
}

}  // namespace prsim
