#include <benchmark/benchmark.h>

#include "absteer/absteer.hpp"

namespace {

using namespace absteer;

void BM_HermitianEigensystem(benchmark::State& state) {
  SeededGenerator g(1);
  const auto rho = random_state(g);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(rho.matrix()));
}
BENCHMARK(BM_HermitianEigensystem);

void BM_SingularValues(benchmark::State& state) {
  SeededGenerator g(2);
  const auto t = to_bloch(random_state(g)).t;
  for (auto _ : state) benchmark::DoNotOptimize(singular_values_3x3(t));
}
BENCHMARK(BM_SingularValues);

void BM_DecideAus3(benchmark::State& state) {
  SeededGenerator g(3);
  const auto rho = random_state(g);
  for (auto _ : state) benchmark::DoNotOptimize(decide_aus3(rho));
}
BENCHMARK(BM_DecideAus3);

void BM_OptimalDirections(benchmark::State& state) {
  SeededGenerator g(4);
  const auto rho = random_state(g);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_directions(rho, 3));
}
BENCHMARK(BM_OptimalDirections);

void BM_HaarUnitary(benchmark::State& state) {
  SeededGenerator g(5);
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(g));
}
BENCHMARK(BM_HaarUnitary);

void BM_ActivationWitness(benchmark::State& state) {
  const auto rho = werner(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(activation_witness(rho));
}
BENCHMARK(BM_ActivationWitness);

void BM_ScanWerner(benchmark::State& state) {
  ScanOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_family(Family::Werner, {0.0, 1.0, 1e-3}, o));
}
BENCHMARK(BM_ScanWerner)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VolumeEstimate(benchmark::State& state) {
  const SeededGenerator g(7);
  for (auto _ : state) benchmark::DoNotOptimize(aus3_volume_estimate(10000, g));
}
BENCHMARK(BM_VolumeEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
