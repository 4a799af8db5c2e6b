#include "prsim/dist_single.hpp"

#include "prsim/errors.hpp"
#include "prsim/ergodicity.hpp"
#include "prsim/spectral.hpp"
#include "update_kernel.hpp"

namespace prsim {

namespace {
constexpr std::size_t kDenseCap = 2000;
}

double rescaled_damping_single(double m, std::size_t n) {
  if (m <= 0.0 || m >= 1.0) throw ValidationError("damping must lie in (0,1)");
  if (n < 2) throw ValidationError("need n >= 2");
  const double nd = static_cast<double>(n);
  return 2.0 * m / (nd - m * (nd - 2.0));
}

DenseMatrix single_update_matrix(const LinkMatrix& A, std::uint32_t page) {
  const std::size_t n = A.size();
  if (n > kDenseCap) throw CapacityError("dense distributed matrices are built for n <= 2000");
  if (page >= n) throw ValidationError("page id out of range");

  DenseMatrix D(n, n);
  for (std::uint32_t j = 0; j < n; ++j)
    if (j != page) D(j, j) = 1.0;
  // Diagonal entries 1 - a(page, j) for pages j that link to `page`.
  for (std::uint32_t j : A.row_cols(page))
    D(j, j) = 1.0 - A.column_value(j);
  // Row and column of the initiating page copy A.
  for (std::uint32_t j : A.row_cols(page)) D(page, j) = A.column_value(j);
  for (std::uint32_t i : A.column_rows(page)) D(i, page) = A.column_value(page);
  D(page, page) = 0.0;
  return D;
}

DenseMatrix average_update_matrix(const LinkMatrix& A) {
  const std::size_t n = A.size();
  if (n > kDenseCap) throw CapacityError("dense average matrix is built for n <= 2000");

  DenseMatrix sum(n, n);
  for (std::uint32_t i = 0; i < n; ++i) sum += single_update_matrix(A, i);
  sum *= 1.0 / static_cast<double>(n);

  DenseMatrix closed = affine_combination(2.0 / static_cast<double>(n),
                                          DenseMatrix::from_link_matrix(A),
                                          (static_cast<double>(n) - 2.0) / static_cast<double>(n));
  const double diff = DenseMatrix::max_abs_diff(sum, closed);
  if (diff > 1e-12)
    throw ConsistencyError("enumerated average deviates from (2/n)A + ((n-2)/n)I by " +
                           std::to_string(diff));
  return sum;
}

void step_single(SimState& s, const LinkMatrix& A, std::uint32_t page, double mhat) {
  detail::single_product(A, page, s.x, s.scratch);
  detail::damped_update(s.scratch, mhat, s.x);
  s.push_average();
}

SimTrace simulate_single(const LinkMatrix& A, const SchemeParams& p,
                         std::uint64_t steps, std::uint64_t sample_every,
                         std::uint64_t stream, const RankVector& reference) {
  if (sample_every == 0) throw ValidationError("sample_every must be >= 1");
  const std::size_t n = A.size();
  const double mhat = rescaled_damping_single(p.m, n);

  SimState s = SimState::from_initial(uniform_probability(n), Rng(p.seed, stream));
  SimTrace t;
  t.meta = {"single-update", n,    p.m,   mhat, p.alpha, std::nullopt,
            std::nullopt,    p.seed, stream, steps, sample_every};

  detail::record_y_sample(t, s, reference, mean_square_error_bound(mhat, 0), true);
  for (std::uint64_t k = 0; k < steps; ++k) {
    const auto page = static_cast<std::uint32_t>(s.rng.next_below(n));
    step_single(s, A, page, mhat);
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

SimTrace simulate_single(const WebGraph& g, const SchemeParams& p, std::uint64_t steps,
                         std::uint64_t sample_every, std::uint64_t stream,
                         const RankVector* reference) {
  const LinkMatrix A = LinkMatrix::from_graph(g);
  if (reference) return simulate_single(A, p, steps, sample_every, stream, *reference);
  const PowerResult pr = power_method(A, p.m, 1e-12);
  return simulate_single(A, p, steps, sample_every, stream, pr.x_star);
}

}  // namespace prsim
