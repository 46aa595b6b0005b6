// Serial reference sweep vs the OpenMP sweep on the desk-scale grid.
//
//   ./build/bench/bench_sweep --benchmark_min_time=1

#include <benchmark/benchmark.h>
#include <omp.h>

#include "handover/oracle.hpp"

namespace {

handover::HandoverTask bench_task(double step) {
  handover::HandoverTask task;
  task.boundary = handover::Boundary::from_anthropometry(task.anthro, step);
  return task;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto task = bench_task(state.range(0) / 1000.0);
  for (auto _ : state) {
    auto res = handover::sweep_serial(task);
    benchmark::DoNotOptimize(res.report.global_min);
  }
  state.counters["cells"] = static_cast<double>(task.boundary.cell_count());
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(task.boundary.cell_count()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto task = bench_task(state.range(0) / 1000.0);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto res = handover::sweep(task, workers);
    benchmark::DoNotOptimize(res.report.global_min);
  }
  state.counters["cells"] = static_cast<double>(task.boundary.cell_count());
  state.counters["workers"] = workers;
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(task.boundary.cell_count()));
}

void parallel_args(benchmark::internal::Benchmark* b) {
  for (int step_mm : {40, 20})
    for (int w = 1; w <= omp_get_num_procs(); w *= 2) b->Args({step_mm, w});
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(40)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
