#include "prsim/state.hpp"

#include <algorithm>

namespace prsim {

SimState SimState::from_initial(RankVector x0, Rng rng) {
  SimState s;
  s.k = 0;
  s.x = std::move(x0);
  s.y = s.x;
  s.rng = rng;
  s.scratch.assign(s.x.size(), 0.0);
  return s;
}

void SimState::push_average() {
  ++k;
  const double kd = static_cast<double>(k);
  const double inv = 1.0 / (kd + 1.0);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (kd * y[i] + x[i]) * inv;
}

void UpdatePattern::sample(Rng& rng, double alpha) {
  initiators.clear();
  for (std::uint32_t i = 0; i < flags.size(); ++i) {
    const bool hit = rng.next_double() < alpha;
    flags[i] = hit ? 1 : 0;
    if (hit) initiators.push_back(i);
  }
}

void UpdatePattern::set_all() {
  initiators.clear();
  for (std::uint32_t i = 0; i < flags.size(); ++i) {
    flags[i] = 1;
    initiators.push_back(i);
  }
}

void UpdatePattern::set_none() {
  initiators.clear();
  std::fill(flags.begin(), flags.end(), 0);
}

void UpdatePattern::set_single(std::uint32_t page) {
  set_none();
  flags[page] = 1;
  initiators.push_back(page);
}

}  // namespace prsim
