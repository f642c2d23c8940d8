#include <benchmark/benchmark.h>

#include "ddseq/kernels.hpp"

using namespace ddseq;

namespace {

std::vector<TorsionPoint> reps(int arity, std::int64_t n) {
  std::vector<TorsionPoint> out;
  for (const auto& [g, xi] : cyclic_subgroups_of(FiniteSubgroup::full(arity, n))) out.push_back(xi);
  return out;
}

const LaurentPoly& exact_poly() {
  static const LaurentPoly f = LaurentPoly::parse("X1 - X2 - 4");
  return f;
}

const NumericPoly& float_poly() {
  static const NumericPoly p = NumericPoly::from(LaurentPoly::parse("1 + X1 + X2"));
  return p;
}

void BM_OrbitNormsSerial(benchmark::State& state) {
  const auto r = reps(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_norms_serial(exact_poly(), r));
}

void BM_OrbitNormsOmp(benchmark::State& state) {
  const auto r = reps(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_norms_omp(exact_poly(), r));
}

void BM_TorusLogSumSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torus_log_sum_serial(float_poly(), static_cast<std::uint64_t>(state.range(0))));
}

void BM_TorusLogSumOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torus_log_sum_omp(float_poly(), static_cast<std::uint64_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_OrbitNormsSerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitNormsOmp)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusLogSumSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusLogSumOmp)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
