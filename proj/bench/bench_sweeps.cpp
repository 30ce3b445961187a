// Serial reference loop vs OpenMP sweep over trajectory samples.

#include <benchmark/benchmark.h>

#include "operadix/bianchi.hpp"
#include "operadix/sweep.hpp"

using namespace operadix;

namespace {

const OscParams kParams(1.0, 2.0);

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_LaxResiduals(benchmark::State& state) {
  const auto type = BianchiType::make(BianchiTag::VIIa, 0.5);
  const LaxCoefficients C = solve_coefficients(catalog(type), kParams.p0);
  const auto times = two_period_grid(kParams, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = lax_residuals(C, kParams, times, default_time_step(kParams.omega), mode(state));
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OnShellJacobiators(benchmark::State& state) {
  const auto type = BianchiType::make(BianchiTag::VIa, 2.0);
  const auto times = two_period_grid(kParams, static_cast<std::size_t>(state.range(0)));
  Sampler sampler(kDefaultSeed);
  const auto triples = random_triples(50, sampler);
  for (auto _ : state) {
    auto r = on_shell_jacobiators(type, kParams, times, triples, mode(state));
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OffShellClosedForm(benchmark::State& state) {
  const auto type = BianchiType::make(BianchiTag::VIIa, 0.5);
  Sampler sampler(kDefaultSeed);
  const auto points = off_shell_points(kParams, static_cast<std::size_t>(state.range(0)), sampler);
  const auto triples = random_triples(8, sampler);
  for (auto _ : state) {
    auto r = point_jacobiators(type, kParams, points, triples, mode(state));
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_LaxResiduals)->ArgsProduct({{64, 1024, 8192}, {0, 1}})->ArgNames({"samples", "omp"});
BENCHMARK(BM_OnShellJacobiators)->ArgsProduct({{64, 1024}, {0, 1}})->ArgNames({"samples", "omp"});
BENCHMARK(BM_OffShellClosedForm)->ArgsProduct({{200, 4096}, {0, 1}})->ArgNames({"points", "omp"});

BENCHMARK_MAIN();
