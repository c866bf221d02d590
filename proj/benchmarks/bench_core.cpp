#include <benchmark/benchmark.h>

#include <vector>

#include "feel/learning.hpp"
#include "feel/lyapunov.hpp"
#include "feel/selection.hpp"
#include "feel/simulator.hpp"

namespace {

using namespace feel;

void BM_OptimalN(benchmark::State& state) {
  const DriftPenaltyConfig drift{1e10, 10.0};
  const UtilityFn u = [](std::int64_t n) { return slot_utility(n, 10.0, CurveParams{}); };
  const auto available = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_n(800.0, available, 50.0, 2000.0, drift, u));
}
BENCHMARK(BM_OptimalN)->Arg(10)->Arg(100)->Arg(1000);

void BM_SelectProposed(benchmark::State& state) {
  Rng rng{7};
  std::vector<ResourceStatus> statuses;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(state.range(0)); ++i)
    statuses.push_back({VehicleId{i}, uniform(rng, 10, 1000), uniform(rng, 0, 1), uniform(rng, 1, 100),
                        uniform(rng, 1, 70), true});
  const Scheme scheme{SchemeKind::proposed};
  for (auto _ : state) benchmark::DoNotOptimize(select(scheme, statuses, 20, 10.0, rng));
}
BENCHMARK(BM_SelectProposed)->Arg(100)->Arg(1000);

void BM_RunServer(benchmark::State& state) {
  SimConfig cfg;
  cfg.scheme.kind = static_cast<SchemeKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_server(cfg, 0, 12345));
}
BENCHMARK(BM_RunServer)
    ->Arg(static_cast<int>(SchemeKind::proposed))
    ->Arg(static_cast<int>(SchemeKind::random_n))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
