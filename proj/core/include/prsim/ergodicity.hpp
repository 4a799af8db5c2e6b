#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prsim/dense_matrix.hpp"
#include "prsim/link_matrix.hpp"
#include "prsim/rng.hpp"

namespace prsim {

/// Coefficient of ergodicity of a column-stochastic matrix:
/// tau(P) = (1/2) max over column pairs (i,j) of sum_r |p_ri - p_rj|.
/// Always in [0,1]; zero exactly when all columns coincide. The input is
/// validated to be column-stochastic within 1e-9.
double ergodicity_coefficient(const DenseMatrix& P);

struct ProductContractionReport {
  std::vector<double> factor_taus;
  double product_tau = 0.0;
  double tau_upper_bound = 0.0;   // product of the factor taus
  double max_column_spread = 0.0; // max_{r,i,j} |t_ri - t_rj| of the product
};

/// Computes tau of each factor and of the backward product P(k)...P(0), and
/// checks submultiplicativity: tau(product) <= prod tau(P(i)) + 1e-10
/// (ConsistencyError on violation, ValidationError on shape mismatch).
ProductContractionReport product_contraction_check(std::span<const DenseMatrix> factors);

/// Samples `trials` random zero-sum unit-l1 vectors and checks
/// ||P x||_1 <= tau(P) + 1e-10 for each; also checks that the extreme point
/// (e_i - e_j)/2 at the maximizing column pair attains tau within 1e-12.
/// Returns true when every check passes.
bool variational_bound_check(const DenseMatrix& P, std::size_t trials, Rng& rng);

/// Mean-square error bound of the averaged schemes: 4(2 + mhat) / (mhat (k+1)).
double mean_square_error_bound(double mhat, std::uint64_t k);

struct ContractionBoundReport {
  double mhat = 0.0;
  double max_tau_single = 0.0;  // max over the n per-page damped matrices
  double tau_average = 0.0;     // tau of the damped average matrix
  bool within_bound = false;    // all taus <= 1 - mhat + 1e-10
};

/// Builds every dense damped matrix M_i = (1-mhat) A_i + (mhat/n) S of the
/// single-update scheme plus their average and checks tau <= 1 - mhat.
/// Dense verification tool; requires n <= 200.
ContractionBoundReport scheme_contraction_report(const LinkMatrix& A, double m);

}  // namespace prsim
