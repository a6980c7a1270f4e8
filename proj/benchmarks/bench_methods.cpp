#include <benchmark/benchmark.h>

#include "cotlat/cotlat.hpp"

namespace {

using cotlat::Complex;
using cotlat::SeriesOrder;

// Arguments: n, 10 * |z|.
void args(benchmark::internal::Benchmark* b) {
  for (const int n : {1, 2, 4, 8}) {
    for (const int z10 : {5, 25, 85, 325}) b->Args({n, z10});
  }
}

Complex arg_z(const benchmark::State& state) { return {state.range(1) / 10.0, 0.0}; }

void BM_direct(benchmark::State& state) {
  const SeriesOrder n(static_cast<int>(state.range(0)));
  const Complex z = arg_z(state);
  std::int64_t work = 0;
  for (auto _ : state) {
    const auto r = cotlat::u_direct(n, z, cotlat::Tolerance{});
    benchmark::DoNotOptimize(r.value);
    work = r.work;
  }
  state.counters["work"] = static_cast<double>(work);
}
BENCHMARK(BM_direct)->Apply(args);

void BM_closed(benchmark::State& state) {
  const SeriesOrder n(static_cast<int>(state.range(0)));
  const Complex z = arg_z(state);
  std::int64_t work = 0;
  for (auto _ : state) {
    const auto r = cotlat::u_closed(n, z);
    benchmark::DoNotOptimize(r.value);
    work = r.work;
  }
  state.counters["work"] = static_cast<double>(work);
}
BENCHMARK(BM_closed)->Apply(args);

void BM_closed_general(benchmark::State& state) {
  const SeriesOrder n(static_cast<int>(state.range(0)));
  const Complex z = arg_z(state);
  for (auto _ : state) benchmark::DoNotOptimize(cotlat::u_closed_general(n, z).value);
}
BENCHMARK(BM_closed_general)->Args({8, 25})->Args({64, 25})->Args({512, 25});

void BM_dyadic(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cotlat::phi(m, Complex{0.7, 0.2}, cotlat::Tolerance{}).value);
}
BENCHMARK(BM_dyadic)->DenseRange(1, 6);

void BM_theta(benchmark::State& state) {
  const SeriesOrder n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cotlat::u_theta(n, Complex{1.0, 0.0}).value);
}
BENCHMARK(BM_theta)->Arg(1)->Arg(2)->Arg(4);

void BM_zeta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cotlat::zeta_even(n).value);
}
BENCHMARK(BM_zeta)->Arg(1)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
