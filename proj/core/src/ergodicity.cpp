#include "prsim/ergodicity.hpp"

#include <cmath>

#include "prsim/dist_single.hpp"
#include "prsim/errors.hpp"

namespace prsim {

namespace {

void validate_column_stochastic(const DenseMatrix& P, double tol) {
  if (P.rows() != P.cols()) throw ValidationError("stochastic matrix must be square");
  for (std::size_t j = 0; j < P.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < P.rows(); ++i) {
      const double v = P(i, j);
      if (v < -1e-12) throw ValidationError("stochastic matrix has a negative entry");
      s += v;
    }
    if (std::fabs(s - 1.0) > tol)
      throw ValidationError("column " + std::to_string(j) + " sums to " + std::to_string(s));
  }
}

struct TauResult {
  double tau = 0.0;
  std::size_t arg_i = 0, arg_j = 0;
};

TauResult tau_with_argmax(const DenseMatrix& P) {
  const std::size_t n = P.cols();
  if (n < 2) return {0.0, 0, 0};
  TauResult best{-1.0, 0, 1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += std::fabs(P(r, i) - P(r, j));
      if (0.5 * s > best.tau) best = {0.5 * s, i, j};
    }
  }
  best.tau = std::max(best.tau, 0.0);
  return best;
}

}  // namespace

double ergodicity_coefficient(const DenseMatrix& P) {
  validate_column_stochastic(P, 1e-9);
  return tau_with_argmax(P).tau;
}

ProductContractionReport product_contraction_check(std::span<const DenseMatrix> factors) {
  if (factors.empty()) throw ValidationError("need at least one factor");
  const std::size_t n = factors.front().rows();
  for (const auto& P : factors)
    if (P.rows() != n || P.cols() != n)
      throw ValidationError("factors must share one square shape");

  ProductContractionReport rep;
  rep.tau_upper_bound = 1.0;
  for (const auto& P : factors) {
    const double tp = ergodicity_coefficient(P);
    rep.factor_taus.push_back(tp);
    rep.tau_upper_bound *= tp;
  }

  // Backward product: the first factor acts first, later ones multiply on
  // the left.
  DenseMatrix T = factors.front();
  for (std::size_t t = 1; t < factors.size(); ++t) T = factors[t].multiply(T);
  rep.product_tau = ergodicity_coefficient(T);

  for (std::size_t r = 0; r < n; ++r) {
    double lo = T(r, 0), hi = T(r, 0);
    for (std::size_t j = 1; j < n; ++j) {
      lo = std::min(lo, T(r, j));
      hi = std::max(hi, T(r, j));
    }
    rep.max_column_spread = std::max(rep.max_column_spread, hi - lo);
  }

  if (rep.product_tau > rep.tau_upper_bound + 1e-10)
    throw ConsistencyError("product coefficient exceeds the factor product bound");
  return rep;
}

bool variational_bound_check(const DenseMatrix& P, std::size_t trials, Rng& rng) {
  if (trials < 1) throw ValidationError("need at least one trial");
  validate_column_stochastic(P, 1e-9);
  const std::size_t n = P.rows();
  if (n < 2) throw ValidationError("variational check needs n >= 2");
  const TauResult tr = tau_with_argmax(P);

  // The extreme point (e_i - e_j)/2 at the maximizing column pair attains tau.
  {
    RankVector x(n, 0.0);
    x[tr.arg_i] = 0.5;
    x[tr.arg_j] = -0.5;
    const double v = l1_norm(P.multiply(x));
    if (std::fabs(v - tr.tau) > 1e-12) return false;
  }

  for (std::size_t t = 0; t < trials; ++t) {
    RankVector x(n);
    double norm = 0.0;
    do {
      double mean = 0.0;
      for (double& v : x) {
        v = 2.0 * rng.next_double() - 1.0;
        mean += v;
      }
      mean /= static_cast<double>(n);
      norm = 0.0;
      for (double& v : x) {
        v -= mean;  // zero-sum
        norm += std::fabs(v);
      }
    } while (norm < 1e-12);
    for (double& v : x) v /= norm;  // unit l1

    if (l1_norm(P.multiply(x)) > tr.tau + 1e-10) return false;
  }
  return true;
}

double mean_square_error_bound(double mhat, std::uint64_t k) {
  if (mhat <= 0.0 || mhat >= 1.0) throw ValidationError("mhat must lie in (0,1)");
  return 4.0 * (2.0 + mhat) / (mhat * static_cast<double>(k + 1));
}

ContractionBoundReport scheme_contraction_report(const LinkMatrix& A, double m) {
  const std::size_t n = A.size();
  if (n > 200) throw ValidationError("dense contraction report is built for n <= 200");

  ContractionBoundReport rep;
  rep.mhat = rescaled_damping_single(m, n);
  const double teleport = rep.mhat / static_cast<double>(n);

  auto damp = [&](DenseMatrix D) {
    D *= 1.0 - rep.mhat;
    for (double& v : D.data()) v += teleport;
    return D;
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    const double tau_i = ergodicity_coefficient(damp(single_update_matrix(A, i)));
    rep.max_tau_single = std::max(rep.max_tau_single, tau_i);
  }
  rep.tau_average = ergodicity_coefficient(damp(average_update_matrix(A)));
  rep.within_bound = rep.max_tau_single <= 1.0 - rep.mhat + 1e-10 &&
                     rep.tau_average <= 1.0 - rep.mhat + 1e-10;
  // Guaranteed by construction: the teleport part cancels out of column
  // differences, so every coefficient is (1-mhat) times one of a stochastic
  // matrix.
  if (!rep.within_bound)
    throw ConsistencyError("damped coefficient exceeded 1 - mhat");
  return rep;
}

}  // namespace prsim
