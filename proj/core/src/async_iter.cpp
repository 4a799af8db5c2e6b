#include "prsim/async_iter.hpp"

#include "prsim/errors.hpp"
#include "prsim/spectral.hpp"
#include "update_kernel.hpp"

namespace prsim {

void step_async(SimState& s, const LinkMatrix& A, const UpdatePattern& p, double m) {
  if (m <= 0.0 || m >= 1.0) throw ValidationError("damping must lie in (0,1)");
  const std::size_t n = A.size();
  // Flagged pages recompute their own row of the power step
  // x_i <- (1-m)(Ax)_i + m/n; others hold. The constant teleport pins the
  // unique fixed point (a state-sum teleport would let the scale drift and
  // the iteration settle on an arbitrary multiple of it). New values are
  // staged so every row reads the old state.
  const double teleport = m / static_cast<double>(n);
  for (std::uint32_t f : p.initiators)
    s.scratch[f] = (1.0 - m) * A.row_product(f, s.x) + teleport;
  for (std::uint32_t f : p.initiators) s.x[f] = s.scratch[f];
  ++s.k;
}

SimTrace simulate_async(const LinkMatrix& A, const SchemeParams& p,
                        std::uint64_t max_steps, double tol, std::uint64_t stream,
                        const RankVector& reference) {
  if (tol <= 0.0) throw ValidationError("tolerance must be positive");
  if (p.alpha <= 0.0 || p.alpha > 1.0) throw ValidationError("alpha must lie in (0,1]");
  const std::size_t n = A.size();

  SimState s = SimState::from_initial(uniform_probability(n), Rng(p.seed, stream));
  SimTrace t;
  t.meta = {"async",      n,      p.m,    p.m,       p.alpha, std::nullopt,
            std::nullopt, p.seed, stream, max_steps, 1};

  UpdatePattern pattern(n);
  auto record = [&] {
    TraceSample row;
    row.k = s.k;
    row.err_l1 = l1_distance(s.x, reference);
    row.err_linf = linf_distance(s.x, reference);
    row.sum = vec_sum(s.x);
    t.samples.push_back(row);
    t.sq_errors.push_back(sq_l2_distance(s.x, reference));
    t.x_samples.push_back(s.x);
  };

  record();
  while (s.k < max_steps && linf_distance(s.x, reference) > tol) {
    pattern.sample(s.rng, p.alpha);
    step_async(s, A, pattern, p.m);
    record();
  }
  t.reached_tol = linf_distance(s.x, reference) <= tol;
  t.final_x = s.x;
  t.final_y = s.x;
  t.steps_run = s.k;
  return t;
}

SimTrace simulate_async(const WebGraph& g, const SchemeParams& p,
                        std::uint64_t max_steps, double tol, std::uint64_t stream,
                        const RankVector* reference) {
  const LinkMatrix A = LinkMatrix::from_graph(g);
  if (reference) return simulate_async(A, p, max_steps, tol, stream, *reference);
  const PowerResult pr = power_method(A, p.m, 1e-12);
  return simulate_async(A, p, max_steps, tol, stream, pr.x_star);
}

}  // namespace prsim
