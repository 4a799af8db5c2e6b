#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>

#include "prsim/dist_simul.hpp"
#include "prsim/dist_single.hpp"
#include "prsim/ergodicity.hpp"
#include "prsim/spectral.hpp"
#include "prsim/termination.hpp"
#include "prsim/web_graph.hpp"

namespace {

using namespace prsim;

const WebGraph& bench_web(std::size_t n) {
  static std::map<std::size_t, WebGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, random_web(n, 12345, n / 100, 2, std::min<std::size_t>(n - 1, 50)))
             .first;
  return it->second;
}

void BM_PowerMethod(benchmark::State& state) {
  const LinkMatrix A = LinkMatrix::from_graph(bench_web(state.range(0)));
  for (auto _ : state) {
    const PowerResult r = power_method(A, 0.15, 1e-10);
    benchmark::DoNotOptimize(r.x_star.data());
  }
}
BENCHMARK(BM_PowerMethod)->Arg(100)->Arg(1000)->Arg(10000);

void BM_StepSingle(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const LinkMatrix A = LinkMatrix::from_graph(bench_web(n));
  const double mhat = rescaled_damping_single(0.15, n);
  SimState s = SimState::from_initial(uniform_probability(n), Rng(1, 0));
  for (auto _ : state) {
    const auto page = static_cast<std::uint32_t>(s.rng.next_below(n));
    step_single(s, A, page, mhat);
    benchmark::DoNotOptimize(s.x.data());
  }
}
BENCHMARK(BM_StepSingle)->Arg(1000)->Arg(10000);

void BM_StepSimul(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const double alpha = static_cast<double>(state.range(1)) / 100.0;
  const LinkMatrix A = LinkMatrix::from_graph(bench_web(n));
  const double mhat = rescaled_damping_simul(0.15, alpha);
  SimState s = SimState::from_initial(uniform_probability(n), Rng(1, 0));
  UpdatePattern p(n);
  for (auto _ : state) {
    p.sample(s.rng, alpha);
    step_simul(s, A, p, mhat);
    benchmark::DoNotOptimize(s.x.data());
  }
}
BENCHMARK(BM_StepSimul)->Args({1000, 1})->Args({1000, 50})->Args({10000, 1});

void BM_TerminatingRun(benchmark::State& state) {
  const WebGraph& g = bench_web(1000);
  const LinkMatrix A = LinkMatrix::from_graph(g);
  const PowerResult ref = power_method(A, 0.15, 1e-12);
  SchemeParams p;
  p.alpha = 0.01;
  TerminationParams tp{0.01, 800};
  for (auto _ : state) {
    const SimTrace t =
        simulate_terminating(A, p, tp, 8000, 1000, 0, uniform_probability(1000), ref.x_star);
    benchmark::DoNotOptimize(t.steps_run);
  }
}
BENCHMARK(BM_TerminatingRun)->Unit(benchmark::kMillisecond);

void BM_ErgodicityCoefficient(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const LinkMatrix A = LinkMatrix::from_graph(bench_web(n));
  Rng rng(3, 0);
  DenseMatrix M = DenseMatrix::from_link_matrix(A);
  M *= 0.85;
  for (double& v : M.data()) v += 0.15 / static_cast<double>(n);
  for (auto _ : state) benchmark::DoNotOptimize(ergodicity_coefficient(M));
}
BENCHMARK(BM_ErgodicityCoefficient)->Arg(50)->Arg(200);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
