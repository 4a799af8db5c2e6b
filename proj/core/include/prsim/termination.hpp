#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "prsim/dist_simul.hpp"
#include "prsim/link_matrix.hpp"
#include "prsim/state.hpp"
#include "prsim/trace.hpp"

namespace prsim {

struct TerminationParams {
  double delta = 0.01;   // relative error level, in (0,1)
  std::uint64_t ns = 1;  // stability window, >= 1

  void validate() const;
};

/// Sliding window over the last `window` pushed values with O(1) amortized
/// min/max queries (monotonic deques). Stands in for the per-page ring
/// buffer of recent time-average values.
class History {
 public:
  explicit History(std::uint64_t window);

  void push(double v);
  bool full() const { return count_ >= window_; }
  std::uint64_t window() const { return window_; }
  std::uint64_t count() const { return count_; }

  /// Valid only once at least one value was pushed.
  double window_min() const { return min_dq_.front().second; }
  double window_max() const { return max_dq_.front().second; }

 private:
  std::uint64_t window_;
  std::uint64_t count_ = 0;
  std::deque<std::pair<std::uint64_t, double>> min_dq_, max_dq_;
};

/// True iff the window is full and every stored value v satisfies
/// |y_now - v| <= delta * y_now.
bool check_converged(const History& history, double y_now, const TerminationParams& tp);

/// State of a terminating run: the base averaged state plus the frozen set,
/// per-page stability windows, and termination times. Frozen entries of x
/// and y never change; the frozen set grows monotonically.
struct TermState {
  SimState base;
  std::vector<std::uint8_t> frozen;
  std::vector<std::int64_t> term_time;  // -1 until frozen
  std::vector<History> history;
  std::size_t frozen_count = 0;

  static TermState from_initial(RankVector x0, Rng rng, const TerminationParams& tp);
  std::size_t size() const { return frozen.size(); }
};

/// One step of the partitioned recursion: non-frozen entries update by
/// x' = (1-mhat) [A_p x] + mhat/n, reading frozen values where columns hit
/// the frozen set; frozen entries of x and y stay fixed regardless of the
/// pattern (their rows act as identity, but their links stay active
/// channels when flagged). Advances k and the running average of the
/// non-frozen block only.
void step_terminated(TermState& s, const LinkMatrix& A, const UpdatePattern& p, double mhat);

/// Equilibrium of the average partitioned system for a fixed frozen set:
/// solves (I - B) x = c with B the non-frozen block of (1-mhat) Abar and
/// c = (1-mhat) Abar_NC y_C + (mhat/n) 1, by fixed-point iteration (the
/// block is a contraction with factor at most 1-mhat). Returns the values
/// of the non-frozen pages in increasing page-id order, all nonnegative.
/// `frozen_values` is full-length; only frozen entries are read.
RankVector frozen_equilibrium(const LinkMatrix& A, double m, double alpha,
                              const std::vector<std::uint8_t>& frozen,
                              const RankVector& frozen_values);

/// Runs the terminating scheme: every page draws Bernoulli(alpha) initiation
/// each step (a frozen page's own value never moves, but its links stay
/// active), value updates go through the partitioned recursion, and a
/// per-step stability check freezes pages whose time average varied by at
/// most delta (relatively) over the last ns steps. Newly frozen values take
/// effect from the next step. Stops when every page froze or k = max_steps.
/// Deterministic per (seed, stream).
SimTrace simulate_terminating(const WebGraph& g, const SchemeParams& p,
                              const TerminationParams& tp, std::uint64_t max_steps,
                              std::uint64_t sample_every, std::uint64_t stream = 0,
                              const RankVector* x0 = nullptr,
                              const RankVector* reference = nullptr);

SimTrace simulate_terminating(const LinkMatrix& A, const SchemeParams& p,
                              const TerminationParams& tp, std::uint64_t max_steps,
                              std::uint64_t sample_every, std::uint64_t stream,
                              const RankVector& x0, const RankVector& reference);

}  // namespace prsim
