// Serial-reference vs parallel kernel timings, plus the composite vector
// field and RK4 step at solver-typical sizes.
//
//   ./bench/gib_bench --benchmark_filter=sum
//   OMP_NUM_THREADS=8 ./bench/gib_bench

#include <benchmark/benchmark.h>

#include <vector>

#include "gib/integrator.hpp"
#include "gib/kernels.hpp"
#include "gib/random_fields.hpp"
#include "gib/solitons.hpp"

using namespace gib;

namespace {

std::vector<double> make_vec(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform_pm();
  return v;
}

void bm_sum_serial(benchmark::State& state) {
  const auto x = make_vec(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::sum(x));
}

void bm_sum_parallel(benchmark::State& state) {
  const auto x = make_vec(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sum(x));
}

void bm_dot3_serial(benchmark::State& state) {
  const auto w = make_vec(state.range(0), 2);
  const auto a = make_vec(state.range(0), 3);
  const auto b = make_vec(state.range(0), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::dot3(w, a, b));
}

void bm_dot3_parallel(benchmark::State& state) {
  const auto w = make_vec(state.range(0), 2);
  const auto a = make_vec(state.range(0), 3);
  const auto b = make_vec(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dot3(w, a, b));
}

void bm_signed_power_serial(benchmark::State& state) {
  const auto x = make_vec(state.range(0), 5);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    kernels::serial::signed_power(x, 2.5, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void bm_signed_power_parallel(benchmark::State& state) {
  const auto x = make_vec(state.range(0), 5);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    kernels::signed_power(x, 2.5, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void bm_rk4_combine_serial(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto u = make_vec(n, 6), k1 = make_vec(n, 7), k2 = make_vec(n, 8),
             k3 = make_vec(n, 9), k4 = make_vec(n, 10);
  std::vector<double> y(n);
  for (auto _ : state) {
    kernels::serial::rk4_combine(u, 0.01, k1, k2, k3, k4, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void bm_rk4_combine_parallel(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto u = make_vec(n, 6), k1 = make_vec(n, 7), k2 = make_vec(n, 8),
             k3 = make_vec(n, 9), k4 = make_vec(n, 10);
  std::vector<double> y(n);
  for (auto _ : state) {
    kernels::rk4_combine(u, 0.01, k1, k2, k3, k4, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void bm_rhs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = make_grid(50.0, n);
  ModelParams mp;
  mp.n_points = n;
  const State s = soliton_state(grid, {2.0, 1.5, 0.0});
  for (auto _ : state) {
    const StateDerivative d = rhs(s, mp);
    benchmark::DoNotOptimize(d.du.values.data());
  }
}

void bm_rk4_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = make_grid(50.0, n);
  ModelParams mp;
  mp.n_points = n;
  State s = soliton_state(grid, {2.0, 1.5, 0.0});
  for (auto _ : state) {
    s = rk4_step(s, 0.01, mp);
    benchmark::DoNotOptimize(s.u.values.data());
  }
}

}  // namespace

BENCHMARK(bm_sum_serial)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_sum_parallel)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_dot3_serial)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_dot3_parallel)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_signed_power_serial)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_signed_power_parallel)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_rk4_combine_serial)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_rk4_combine_parallel)->Arg(4096)->Arg(65536)->Arg(1 << 20);
BENCHMARK(bm_rhs)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(bm_rk4_step)->Arg(1024)->Arg(4096)->Arg(16384);

BENCHMARK_MAIN();
