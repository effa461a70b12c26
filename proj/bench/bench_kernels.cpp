// Serial reference vs OpenMP kernels: the sweep oracle and the grid search.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "mlt/coverage.hpp"
#include "mlt/search.hpp"

namespace {

using namespace mlt;

ConvexPolygon d8() {
  auto p = [](const char* x, const char* y) { return Point2{parse_rational(x), parse_rational(y)}; };
  return canonicalize({p("-3/10", "-2"), p("3/10", "-1"), p("7/10", "0"), p("13/10", "2"), p("3/10", "2"),
                       p("-3/10", "1"), p("-7/10", "0"), p("-13/10", "-2")});
}

ConvexPolygon sweep_input(int which) { return which == 0 ? d8() : random_cs_integer_polygon(7, 6, 2); }

void BM_SweepSerial(benchmark::State& state) {
  const auto p = sweep_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(slab_sweep_verify_serial(p, Lattice2::integer()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto p = sweep_input(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(slab_sweep_verify(p, Lattice2::integer()));
  state.counters["threads"] = static_cast<double>(state.range(1));
}

SearchConfig search_config(int edges) {
  SearchConfig c;
  c.edge_count = edges;
  c.grid_denominator = 2;
  c.bound = 2;
  c.max_k = 4;
  return c;
}

void BM_SearchSerial(benchmark::State& state) {
  const auto c = search_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_min_k_serial(c));
}

void BM_SearchParallel(benchmark::State& state) {
  const auto c = search_config(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(search_min_k(c));
  state.counters["threads"] = static_cast<double>(state.range(1));
}

void thread_counts(benchmark::internal::Benchmark* b, int input_lo, int input_hi, int step) {
  const int max_threads = omp_get_num_procs();
  for (int input = input_lo; input <= input_hi; input += step) {
    for (int t = 1; t <= max_threads; t *= 2) b->Args({input, t});
    if ((max_threads & (max_threads - 1)) != 0) b->Args({input, max_threads});
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Apply([](auto* b) { thread_counts(b, 0, 1, 1); })->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Apply([](auto* b) { thread_counts(b, 8, 10, 2); })->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
