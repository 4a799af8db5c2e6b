#include "prsim/dist_simul.hpp"

#include <vector>

#include "prsim/errors.hpp"
#include "prsim/ergodicity.hpp"
#include "prsim/spectral.hpp"
#include "update_kernel.hpp"

namespace prsim {

namespace {
constexpr std::size_t kDenseCap = 2000;
constexpr std::size_t kEnumCap = 12;
}

double rescaled_damping_simul(double m, double alpha) {
  if (m <= 0.0 || m >= 1.0) throw ValidationError("damping must lie in (0,1)");
  if (alpha <= 0.0 || alpha > 1.0) throw ValidationError("alpha must lie in (0,1]");
  const double q = (1.0 - alpha) * (1.0 - alpha);
  return m * (1.0 - q) / (1.0 - m * q);
}

DenseMatrix pattern_matrix(const LinkMatrix& A, const UpdatePattern& p) {
  const std::size_t n = A.size();
  if (n > kDenseCap) throw CapacityError("dense pattern matrices are built for n <= 2000");
  if (p.size() != n) throw ValidationError("pattern length does not match matrix dimension");

  DenseMatrix D(n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const double v = A.column_value(j);
    if (p.flags[j]) {
      for (std::uint32_t r : A.column_rows(j)) D(r, j) = v;
    } else {
      double depletion = 0.0;
      for (std::uint32_t r : A.column_rows(j)) {
        if (p.flags[r]) {
          D(r, j) = v;
          depletion += v;
        }
      }
      D(j, j) = 1.0 - depletion;
    }
  }
  return D;
}

DenseMatrix average_pattern_matrix(const LinkMatrix& A, double alpha) {
  if (A.size() > kDenseCap) throw CapacityError("dense average matrix is built for n <= 2000");
  if (alpha < 0.0 || alpha > 1.0) throw ValidationError("alpha must lie in [0,1]");
  const double q = (1.0 - alpha) * (1.0 - alpha);
  return affine_combination(1.0 - q, DenseMatrix::from_link_matrix(A), q);
}

DenseMatrix average_pattern_matrix_enumerated(const LinkMatrix& A, double alpha) {
  const std::size_t n = A.size();
  if (n > kEnumCap)
    throw CapacityError("pattern enumeration is 2^n; refuse n > " + std::to_string(kEnumCap));
  if (alpha < 0.0 || alpha > 1.0) throw ValidationError("alpha must lie in [0,1]");

  std::vector<double> pow_a(n + 1, 1.0), pow_b(n + 1, 1.0);
  for (std::size_t l = 1; l <= n; ++l) {
    pow_a[l] = pow_a[l - 1] * alpha;
    pow_b[l] = pow_b[l - 1] * (1.0 - alpha);
  }

  DenseMatrix acc(n, n);
  UpdatePattern p(n);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    p.initiators.clear();
    std::size_t ones = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const bool hit = (mask >> i) & 1ull;
      p.flags[i] = hit ? 1 : 0;
      if (hit) {
        p.initiators.push_back(i);
        ++ones;
      }
    }
    DenseMatrix term = pattern_matrix(A, p);
    term *= pow_a[ones] * pow_b[n - ones];
    acc += term;
  }
  return acc;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t c = std::min(r, k); c >= 1; --c) {
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(row[c], row[c - 1], &sum))
        throw CapacityError("binomial coefficient overflows 64 bits");
      row[c] = sum;
    }
  }
  return row[k];
}

DenseMatrix initiator_class_sum(const LinkMatrix& A, std::size_t l) {
  const std::size_t n = A.size();
  if (n > kDenseCap) throw CapacityError("dense class sums are built for n <= 2000");
  if (n > 64) throw CapacityError("exact binomials are kept up to n = 64");
  if (l > n) throw ValidationError("initiator count exceeds n");

  const DenseMatrix Adense = DenseMatrix::from_link_matrix(A);
  if (l == n) return Adense;
  if (l == n - 1) return affine_combination(static_cast<double>(n), Adense, 0.0);
  const double on_links = static_cast<double>(binomial(n, l) - binomial(n - 2, l));
  const double on_diag = static_cast<double>(binomial(n - 2, l));
  return affine_combination(on_links, Adense, on_diag);
}

void step_simul(SimState& s, const LinkMatrix& A, const UpdatePattern& p, double mhat) {
  detail::pattern_product(A, p, s.x, s.scratch);
  detail::damped_update(s.scratch, mhat, s.x);
  s.push_average();
}

SimTrace simulate_simul(const LinkMatrix& A, const SchemeParams& p,
                        std::uint64_t steps, std::uint64_t sample_every,
                        std::uint64_t stream, const RankVector& reference) {
  if (sample_every == 0) throw ValidationError("sample_every must be >= 1");
  const std::size_t n = A.size();
  const double mhat = rescaled_damping_simul(p.m, p.alpha);

  SimState s = SimState::from_initial(uniform_probability(n), Rng(p.seed, stream));
  SimTrace t;
  t.meta = {"simultaneous", n,      p.m,    mhat, p.alpha, std::nullopt,
            std::nullopt,   p.seed, stream, steps, sample_every};

  UpdatePattern pattern(n);
  detail::record_y_sample(t, s, reference, mean_square_error_bound(mhat, 0), true);
  for (std::uint64_t k = 0; k < steps; ++k) {
    pattern.sample(s.rng, p.alpha);
    step_simul(s, A, pattern, mhat);
    if (s.k % sample_every == 0 && s.k != steps)
      detail::record_y_sample(t, s, reference, mean_square_error_bound(mhat, s.k), true);
  }
  if (t.samples.back().k != steps)
    detail::record_y_sample(t, s, reference, mean_square_error_bound(mhat, s.k), true);
  t.final_x = s.x;
  t.final_y = s.y;
  t.steps_run = steps;
  return t;
}

SimTrace simulate_simul(const WebGraph& g, const SchemeParams& p, std::uint64_t steps,
                        std::uint64_t sample_every, std::uint64_t stream,
                        const RankVector* reference) {
  const LinkMatrix A = LinkMatrix::from_graph(g);
  if (reference) return simulate_simul(A, p, steps, sample_every, stream, *reference);
  const PowerResult pr = power_method(A, p.m, 1e-12);
  return simulate_simul(A, p, steps, sample_every, stream, pr.x_star);
}

}  // namespace prsim
