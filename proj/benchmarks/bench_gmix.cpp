#include <benchmark/benchmark.h>

#include <numbers>

#include "gmix/beam_splitter.hpp"
#include "gmix/channel.hpp"
#include "gmix/criterion.hpp"
#include "gmix/ppt.hpp"
#include "gmix/scenario.hpp"
#include "gmix/state.hpp"

namespace {

constexpr double pi = std::numbers::pi;

void BM_Fidelity(benchmark::State& state) {
  const auto a = gmix::make_cm({0.92, 0.0, 0.0});
  const auto b = gmix::make_cm({0.92, pi / 2.0, 0.3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmix::fidelity(a, b));
  }
}
BENCHMARK(BM_Fidelity);

void BM_Threshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmix::threshold(0.8, 0.6, 0.25));
  }
}
BENCHMARK(BM_Threshold);

void BM_Evolve(benchmark::State& state) {
  const auto cm = gmix::make_cm({0.92, 0.0, 0.0});
  const gmix::ChannelSpec channel{0.7, 1.0, {0.0, 0.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmix::evolve(cm, channel));
  }
}
BENCHMARK(BM_Evolve);

void BM_MixAndPpt(benchmark::State& state) {
  const auto c = gmix::make_cm({0.92, 0.0, 0.0});
  const auto d = gmix::make_cm({0.92, pi / 2.0, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmix::ppt_check(gmix::mix(c, d, 0.5)));
  }
}
BENCHMARK(BM_MixAndPpt);

void BM_Sweep(benchmark::State& state) {
  gmix::ScenarioSpec spec;
  spec.kind = gmix::ScenarioKind::SymmetricThermal;
  spec.r = 0.92;
  spec.n_th = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmix::sweep(spec, {201, 0.005, 1.0}));
  }
}
BENCHMARK(BM_Sweep);

void BM_CriticalTransmission(benchmark::State& state) {
  gmix::ScenarioSpec spec;
  spec.kind = gmix::ScenarioKind::SymmetricThermal;
  spec.r = 0.92;
  spec.n_th = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmix::critical_transmission(spec));
  }
}
BENCHMARK(BM_CriticalTransmission);

}  // namespace

BENCHMARK_MAIN();
