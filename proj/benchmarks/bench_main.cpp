#include <benchmark/benchmark.h>

#include "abelcycle/abelian.hpp"
#include "abelcycle/dynamics.hpp"
#include "abelcycle/identities.hpp"

using namespace abelcycle;

namespace {

constexpr double kHStar = -671.0 / 5376.0;
constexpr double kReferenceSpeed = 100000.0 / 388851.0;

void BM_RatioF(benchmark::State& state) {
  const ModelParams m(static_cast<int>(state.range(0)));
  const double h = 0.5 * m.p1();
  for (auto _ : state) benchmark::DoNotOptimize(ratio_F(m, h));
}
BENCHMARK(BM_RatioF)->Arg(1)->Arg(5)->Arg(10);

void BM_RatioNearHomoclinic(benchmark::State& state) {
  const ModelParams m(5);
  const double h = -1e-6 * std::abs(m.p1());
  for (auto _ : state) benchmark::DoNotOptimize(ratio_F(m, h));
}
BENCHMARK(BM_RatioNearHomoclinic);

void BM_C0Curve64(benchmark::State& state) {
  const ModelParams m(5);
  for (auto _ : state) benchmark::DoNotOptimize(c0_curve(m, 64));
}
BENCHMARK(BM_C0Curve64)->Unit(benchmark::kMillisecond);

void BM_LevelForSpeed(benchmark::State& state) {
  const ModelParams m(5);
  for (auto _ : state) benchmark::DoNotOptimize(level_for_speed(m, kReferenceSpeed));
}
BENCHMARK(BM_LevelForSpeed)->Unit(benchmark::kMicrosecond);

void BM_ReturnMap(benchmark::State& state) {
  const PerturbedParams p(ModelParams(5), 0.1, kReferenceSpeed);
  for (auto _ : state) benchmark::DoNotOptimize(return_map(p, 0.3));
}
BENCHMARK(BM_ReturnMap)->Unit(benchmark::kMicrosecond);

void BM_FindLimitCycle(benchmark::State& state) {
  const PerturbedParams p(ModelParams(5), 0.1, kReferenceSpeed);
  for (auto _ : state) benchmark::DoNotOptimize(find_limit_cycle(p, {0.1, 0.9}));
}
BENCHMARK(BM_FindLimitCycle)->Unit(benchmark::kMillisecond);

void BM_Involution(benchmark::State& state) {
  const ModelParams m(7);
  double u = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(involution(m, u));
    u = u < 1.0 ? u + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_Involution);

}  // namespace

BENCHMARK_MAIN();
