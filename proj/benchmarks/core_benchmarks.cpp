#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "intercept/lloyd.hpp"
#include "intercept/partition.hpp"
#include "intercept/single_vehicle.hpp"

namespace {

using namespace intercept;

Density ramp() {
  return Density::piecewise_linear({{0.0, 0.0}, {0.25, 2.0}, {1.0, 0.0}});
}

std::vector<VehiclePos> row(std::size_t m) {
  std::vector<VehiclePos> ps;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
    ps.push_back({t, 0.1 + 0.05 * std::sin(7.0 * t)});
  }
  return ps;
}

void BM_ExpectedCost(benchmark::State& state) {
  const Density d = ramp();
  const CostCoeffs k = CostCoeffs::constrained_time(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_cost({0.4, 0.2}, k, d));
  }
}
BENCHMARK(BM_ExpectedCost);

void BM_ExpectedCostGradient(benchmark::State& state) {
  const Density d = ramp();
  const CostCoeffs k = CostCoeffs::constrained_time(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_cost_gradient({0.4, 0.2}, k, d));
  }
}
BENCHMARK(BM_ExpectedCostGradient);

void BM_OptimizeSingle(benchmark::State& state) {
  const Density d = ramp();
  const CostCoeffs k = CostCoeffs::constrained_time(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_single({0.1, 0.8}, k, d));
  }
}
BENCHMARK(BM_OptimizeSingle)->Unit(benchmark::kMillisecond);

void BM_DominancePartition(benchmark::State& state) {
  const auto ps = row(static_cast<std::size_t>(state.range(0)));
  const GameParams g(1.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dominance_partition(ps, g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DominancePartition)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_LloydRound(benchmark::State& state) {
  const Density d = ramp();
  const Configuration c{row(static_cast<std::size_t>(state.range(0))), GameParams(1.0, 0.5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lloyd_round(c, d));
  }
}
BENCHMARK(BM_LloydRound)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
