// Serial reference loops against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "orbitcat/instances.hpp"
#include "orbitcat/para_suite.hpp"

namespace {

using namespace orbitcat;

void BM_DualitySuiteSerial(benchmark::State& state) {
  const para::DualitySuiteConfig config{static_cast<int>(state.range(0)), 2, 16};
  for (auto _ : state) benchmark::DoNotOptimize(para::run_duality_suite_serial(config));
}

void BM_DualitySuiteParallel(benchmark::State& state) {
  const para::DualitySuiteConfig config{static_cast<int>(state.range(0)), 2, 16};
  for (auto _ : state) benchmark::DoNotOptimize(para::run_duality_suite_parallel(config));
}

void BM_Congruence(benchmark::State& state, const char* name, Execution exec) {
  const auto inst = instances::build(name);
  for (auto _ : state) benchmark::DoNotOptimize(orbit::check_congruence(inst, exec));
}

}  // namespace

BENCHMARK(BM_DualitySuiteSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualitySuiteParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Congruence, s3_orbit_dual_serial, "s3-orbit-dual", orbitcat::Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Congruence, s3_orbit_dual_parallel, "s3-orbit-dual",
                  orbitcat::Execution::Parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Congruence, z6_two_normals_serial, "z6-two-normals",
                  orbitcat::Execution::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Congruence, z6_two_normals_parallel, "z6-two-normals",
                  orbitcat::Execution::Parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
