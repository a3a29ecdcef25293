#include <benchmark/benchmark.h>

#include <numbers>

#include "qhj/action.hpp"
#include "qhj/eigensolver.hpp"
#include "qhj/qhje.hpp"

namespace {

void BM_ClassicalAction(benchmark::State& state) {
  const auto model = qhj::PotentialModel::quartic(1.0);
  double E = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qhj::classical_action(model, E));
    E += 1e-9;
  }
}
BENCHMARK(BM_ClassicalAction);

void BM_WkbEnergy(benchmark::State& state) {
  const auto model = qhj::PotentialModel::morse(32.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(qhj::wkb_energy(model, 3));
}
BENCHMARK(BM_WkbEnergy);

void BM_Eigenvalue(benchmark::State& state) {
  const auto model = qhj::PotentialModel::quartic(1.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhj::eigenvalue(model, n));
}
BENCHMARK(BM_Eigenvalue)->Arg(0)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HydrogenEigenvalue(benchmark::State& state) {
  const auto model = qhj::PotentialModel::coulomb(1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qhj::eigenvalue(model, 4));
}
BENCHMARK(BM_HydrogenEigenvalue)->Unit(benchmark::kMillisecond);

void BM_QhjFields(benchmark::State& state) {
  const auto model = qhj::PotentialModel::quartic(1.0);
  qhj::QhjFieldOptions options;
  options.n_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qhj::qhj_fields(model, 10.244308455438773, options));
}
BENCHMARK(BM_QhjFields)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_QuantizeViaQhj(benchmark::State& state) {
  const auto model = qhj::PotentialModel::harmonic(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(qhj::quantize_via_qhj(model, 3));
}
BENCHMARK(BM_QuantizeViaQhj)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
