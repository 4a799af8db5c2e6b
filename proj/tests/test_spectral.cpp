#include "prsim/spectral.hpp"

#include <gtest/gtest.h>

#include "prsim/errors.hpp"
#include "support.hpp"

namespace prsim::test {
namespace {

TEST(PowerMethod, FourPageReferenceValues) {
  const LinkMatrix A = LinkMatrix::from_graph(web4());
  const PowerResult r = power_method(A, 0.15, 1e-10);
  const RankVector expected = web4_x_star();
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(r.x_star[i], expected[i], 5e-4);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_NEAR(vec_sum(r.x_star), 1.0, 1e-9);
}

TEST(PowerMethod, TwoCycleIsUniform) {
  const LinkMatrix A = LinkMatrix::from_graph(two_cycle());
  for (double m : {0.15, 0.5, 0.9}) {
    const PowerResult r = power_method(A, m, 1e-12);
    EXPECT_NEAR(r.x_star[0], 0.5, 1e-10);
    EXPECT_NEAR(r.x_star[1], 0.5, 1e-10);
  }
}

TEST(PowerMethod, MatchesDenseLinearSolve) {
  // Independent oracle: x* solves (I - (1-m)A) x = (m/n) 1 by elimination.
  Rng rng(21, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 5;
    const WebGraph g = random_patched_graph(rng, n);
    const LinkMatrix A = LinkMatrix::from_graph(g);
    const double m = 0.15;

    DenseMatrix sys = DenseMatrix::from_link_matrix(A);
    sys *= -(1.0 - m);
    for (std::size_t i = 0; i < n; ++i) sys(i, i) += 1.0;
    const RankVector oracle = gauss_solve(sys, RankVector(n, m / static_cast<double>(n)));

    const PowerResult r = power_method(A, m, 1e-12);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r.x_star[i], oracle[i], 1e-10);
  }
}

TEST(PowerMethod, StartInvariance) {
  const LinkMatrix A = LinkMatrix::from_graph(web4());
  const double tol = 1e-11;
  const PowerResult a = power_method(A, 0.15, tol);
  Rng rng(2, 0);
  RankVector x0(4);
  double sum = 0.0;
  for (double& v : x0) {
    v = rng.next_double();
    sum += v;
  }
  for (double& v : x0) v /= sum;
  const PowerResult b = power_method(A, 0.15, x0, tol, 200000);
  EXPECT_LE(l1_distance(a.x_star, b.x_star), 2 * tol);
}

TEST(PowerMethod, NonConvergenceCarriesLastIterate) {
  const LinkMatrix A = LinkMatrix::from_graph(web4());
  try {
    power_method(A, 0.15, uniform_probability(4), 1e-14, 2);
    FAIL() << "expected a convergence error";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.iterations(), 2u);
    EXPECT_EQ(e.last_iterate().size(), 4u);
    EXPECT_NEAR(vec_sum(e.last_iterate()), 1.0, 1e-9);
  }
}

TEST(SecondEigenvalue, FourPageWithinDampingBound) {
  const LinkMatrix A = LinkMatrix::from_graph(web4());
  const PowerResult r = power_method(A, 0.15, 1e-13);
  const double lam2 = second_eigenvalue_modulus(A, 0.15, r.x_star, 1e-8);
  EXPECT_LE(lam2, 0.85 + 1e-6);
  EXPECT_GE(lam2, 0.0);
}

TEST(SecondEigenvalue, ExtremeDamping) {
  const LinkMatrix A = LinkMatrix::from_graph(web4());
  const PowerResult r = power_method(A, 0.99, 1e-13);
  EXPECT_LE(second_eigenvalue_modulus(A, 0.99, r.x_star, 1e-8), 0.01 + 1e-6);
}

TEST(SecondEigenvalue, TwoCycleExactValue) {
  // Eigenvalues of the damped two-cycle matrix are 1 and -(1-m).
  const LinkMatrix A = LinkMatrix::from_graph(two_cycle());
  const PowerResult r = power_method(A, 0.15, 1e-13);
  EXPECT_NEAR(second_eigenvalue_modulus(A, 0.15, r.x_star, 1e-9), 0.85, 1e-7);
}

TEST(SecondEigenvalue, BoundHoldsOnRandomGraphs) {
  Rng rng(31, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.next_below(49);
    const WebGraph g = random_patched_graph(rng, n);
    const LinkMatrix A = LinkMatrix::from_graph(g);
    const PowerResult r = power_method(A, 0.15, 1e-13);
    const double lam2 = second_eigenvalue_modulus(A, 0.15, r.x_star, 1e-8);
    EXPECT_LE(lam2, 0.85 + 1e-6) << "n=" << n;
  }
}

TEST(RateBound, KnownValues) {
  EXPECT_NEAR(average_convergence_rate_bound(0.15, 1.0), 0.85, 1e-15);
  EXPECT_NEAR(average_convergence_rate_bound(0.15, 0.5), 0.85 / 0.9625, 1e-12);
}

TEST(RateBound, MonotoneDecreasingInAlpha) {
  double prev = 2.0;
  for (double alpha = 0.05; alpha <= 1.0; alpha += 0.05) {
    const double v = average_convergence_rate_bound(0.15, alpha);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(RateBound, RejectsBadParameters) {
  EXPECT_THROW(average_convergence_rate_bound(0.0, 0.5), ValidationError);
  EXPECT_THROW(average_convergence_rate_bound(0.15, 0.0), ValidationError);
  EXPECT_THROW(average_convergence_rate_bound(0.15, 1.5), ValidationError);
}

}  // namespace
}  // namespace prsim::test
