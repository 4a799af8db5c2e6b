#pragma once

#include <cstddef>

#include "prsim/link_matrix.hpp"
#include "prsim/vec.hpp"

namespace prsim {

struct PowerResult {
  RankVector x_star;      // probability vector
  std::size_t iterations = 0;
  double residual = 0.0;  // ||M x_star - x_star||_1
};

/// Power method on M = (1-m)A + (m/n)S. Stops when the l1 step difference
/// drops to tol; the residual is reported separately. Throws ConvergenceError
/// carrying the last iterate when max_iter is exceeded.
PowerResult power_method(const LinkMatrix& A, double m, const RankVector& x0,
                         double tol, std::size_t max_iter);

/// Convenience overload starting from the uniform probability vector.
PowerResult power_method(const LinkMatrix& A, double m, double tol = 1e-12,
                         std::size_t max_iter = 200000);

/// |lambda_2(M)| for the damped matrix M, via the deflated operator
/// x -> M x - (sum x) x_star. The modulus is extracted with normalized
/// repeated squaring of the dense deflated matrix, which converges for
/// complex eigenvalue pairs as well. Intended for n <= 200.
double second_eigenvalue_modulus(const LinkMatrix& A, double m,
                                 const RankVector& x_star, double tol);

/// Bound on |lambda_2| of the average matrix of the simultaneous-update
/// scheme: (1-m) / (1 - m (1-alpha)^2). Monotonically decreasing in alpha.
double average_convergence_rate_bound(double m, double alpha);

}  // namespace prsim
