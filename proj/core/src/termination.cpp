#include "prsim/termination.hpp"

#include <algorithm>
#include <cmath>

#include "prsim/errors.hpp"
#include "prsim/spectral.hpp"
#include "update_kernel.hpp"

namespace prsim {

void TerminationParams::validate() const {
  if (delta <= 0.0 || delta >= 1.0) throw ValidationError("delta must lie in (0,1)");
  if (ns < 1) throw ValidationError("stability window ns must be >= 1");
}

History::History(std::uint64_t window) : window_(window) {
  if (window < 1) throw ValidationError("history window must be >= 1");
}

void History::push(double v) {
  const std::uint64_t t = count_++;
  while (!min_dq_.empty() && min_dq_.back().second >= v) min_dq_.pop_back();
  min_dq_.emplace_back(t, v);
  while (!max_dq_.empty() && max_dq_.back().second <= v) max_dq_.pop_back();
  max_dq_.emplace_back(t, v);
  if (count_ >= window_) {
    const std::uint64_t cutoff = count_ - window_;
    while (min_dq_.front().first < cutoff) min_dq_.pop_front();
    while (max_dq_.front().first < cutoff) max_dq_.pop_front();
  }
}

bool check_converged(const History& history, double y_now, const TerminationParams& tp) {
  tp.validate();
  if (history.window() != tp.ns)
    throw ValidationError("history window does not match the stability window ns");
  if (!history.full()) return false;
  // |y_now - v| <= delta*y_now for every window value v, via the window extremes.
  const double bound = tp.delta * y_now;
  return history.window_max() - y_now <= bound && y_now - history.window_min() <= bound;
}

TermState TermState::from_initial(RankVector x0, Rng rng, const TerminationParams& tp) {
  tp.validate();
  TermState ts;
  const std::size_t n = x0.size();
  ts.base = SimState::from_initial(std::move(x0), rng);
  ts.frozen.assign(n, 0);
  ts.term_time.assign(n, -1);
  ts.history.assign(n, History(tp.ns));
  return ts;
}

void step_terminated(TermState& s, const LinkMatrix& A, const UpdatePattern& p, double mhat) {
  const std::size_t n = A.size();

  // The stability windows hold the averages of prior steps.
  for (std::uint32_t i = 0; i < n; ++i)
    if (!s.frozen[i]) s.history[i].push(s.base.y[i]);

  detail::pattern_product(A, p, s.base.x, s.base.scratch);
  const double teleport = mhat / static_cast<double>(n);
  const double keep = 1.0 - mhat;
  for (std::uint32_t i = 0; i < n; ++i)
    if (!s.frozen[i]) s.base.x[i] = keep * s.base.scratch[i] + teleport;

  ++s.base.k;
  const double kd = static_cast<double>(s.base.k);
  const double inv = 1.0 / (kd + 1.0);
  for (std::uint32_t i = 0; i < n; ++i)
    if (!s.frozen[i]) s.base.y[i] = (kd * s.base.y[i] + s.base.x[i]) * inv;
}

RankVector frozen_equilibrium(const LinkMatrix& A, double m, double alpha,
                              const std::vector<std::uint8_t>& frozen,
                              const RankVector& frozen_values) {
  const std::size_t n = A.size();
  if (frozen.size() != n || frozen_values.size() != n)
    throw ValidationError("frozen mask / values must be full length");
  const double mhat = rescaled_damping_simul(m, alpha);

  std::size_t active = 0;
  for (auto f : frozen) active += f ? 0 : 1;
  if (active == 0) throw ValidationError("at least one page must stay active");

  const double q = (1.0 - alpha) * (1.0 - alpha);
  const double on_links = 1.0 - q;
  const double teleport = mhat / static_cast<double>(n);
  const double keep = 1.0 - mhat;

  // One application of the average map, x_full -> (1-mhat) Abar x_full + t,
  // restricted to active rows. Abar x = [1-(1-a)^2] A x + (1-a)^2 x.
  RankVector cur(n, 0.0), ax(n, 0.0), next(n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i)
    if (frozen[i]) cur[i] = frozen_values[i];

  const std::size_t cap =
      128 + static_cast<std::size_t>(std::ceil(64.0 / mhat));
  for (std::size_t it = 0; it < cap; ++it) {
    A.multiply(cur, ax);
    double step = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (frozen[i]) continue;
      const double v = keep * (on_links * ax[i] + q * cur[i]) + teleport;
      step += std::fabs(v - cur[i]);
      next[i] = v;
    }
    for (std::uint32_t i = 0; i < n; ++i)
      if (!frozen[i]) cur[i] = next[i];
    if (step < 1e-12) {
      RankVector out;
      out.reserve(active);
      for (std::uint32_t i = 0; i < n; ++i)
        if (!frozen[i]) out.push_back(cur[i]);
      return out;
    }
  }
  RankVector last;
  for (std::uint32_t i = 0; i < n; ++i)
    if (!frozen[i]) last.push_back(cur[i]);
  throw ConvergenceError("frozen-block equilibrium iteration failed to contract "
                         "(construction bug: the block is a guaranteed contraction)",
                         last, cap);
}

SimTrace simulate_terminating(const LinkMatrix& A, const SchemeParams& p,
                              const TerminationParams& tp, std::uint64_t max_steps,
                              std::uint64_t sample_every, std::uint64_t stream,
                              const RankVector& x0, const RankVector& reference) {
  tp.validate();
  if (sample_every == 0) throw ValidationError("sample_every must be >= 1");
  const std::size_t n = A.size();
  if (x0.size() != n) throw ValidationError("initial vector length mismatch");
  const double mhat = rescaled_damping_simul(p.m, p.alpha);

  TermState ts = TermState::from_initial(x0, Rng(p.seed, stream), tp);
  SimTrace t;
  t.meta = {"terminating", n,      p.m,    mhat,      p.alpha, tp.delta,
            tp.ns,         p.seed, stream, max_steps, sample_every};

  UpdatePattern pattern(n);
  std::vector<std::uint32_t> newly_frozen;
  std::vector<double> pinned_values;
  detail::record_y_sample(t, ts.base, reference, std::nullopt, true);

  while (ts.frozen_count < n && ts.base.k < max_steps) {
    // Pages whose average just passed the stability test freeze at the value
    // it has now; the transition below still runs with the old frozen set,
    // and the pins overwrite the freshly computed entries afterwards.
    newly_frozen.clear();
    pinned_values.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      if (ts.frozen[i]) continue;
      if (check_converged(ts.history[i], ts.base.y[i], tp)) {
        newly_frozen.push_back(i);
        pinned_values.push_back(ts.base.y[i]);
      }
    }
    const auto freeze_k = static_cast<std::int64_t>(ts.base.k);

    pattern.sample(ts.base.rng, p.alpha);
    step_terminated(ts, A, pattern, mhat);

    for (std::size_t j = 0; j < newly_frozen.size(); ++j) {
      const std::uint32_t i = newly_frozen[j];
      ts.base.x[i] = pinned_values[j];
      ts.base.y[i] = pinned_values[j];
      ts.frozen[i] = 1;
      ts.term_time[i] = freeze_k;
      ++ts.frozen_count;
    }

    if (ts.base.k % sample_every == 0 && ts.base.k != max_steps)
      detail::record_y_sample(t, ts.base, reference, std::nullopt, true);
  }

  if (t.samples.back().k != ts.base.k)
    detail::record_y_sample(t, ts.base, reference, std::nullopt, true);
  t.final_x = ts.base.x;
  t.final_y = ts.base.y;
  t.steps_run = ts.base.k;
  t.term_times = ts.term_time;
  return t;
}

SimTrace simulate_terminating(const WebGraph& g, const SchemeParams& p,
                              const TerminationParams& tp, std::uint64_t max_steps,
                              std::uint64_t sample_every, std::uint64_t stream,
                              const RankVector* x0, const RankVector* reference) {
  const LinkMatrix A = LinkMatrix::from_graph(g);
  const RankVector init = x0 ? *x0 : uniform_probability(A.size());
  if (reference)
    return simulate_terminating(A, p, tp, max_steps, sample_every, stream, init, *reference);
  const PowerResult pr = power_method(A, p.m, 1e-12);
  return simulate_terminating(A, p, tp, max_steps, sample_every, stream, init, pr.x_star);
}

}  // namespace prsim
