#include <benchmark/benchmark.h>

#include "syzkit/linalg.hpp"

using namespace syzkit;

static void BM_KernelGF2(benchmark::State& state) {
  size_t rows = state.range(0), cols = state.range(1);
  gf::Field f2 = gf::make_field(2, 1);
  Rng rng(1);
  linalg::MatrixFq m = linalg::random_matrix(f2, rows, cols, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::left_kernel_basis(m));
  }
  state.SetItemsProcessed(state.iterations() * rows * cols);
}
BENCHMARK(BM_KernelGF2)->Args({512, 1024})->Args({2048, 4096})->Args({4096, 16384})
    ->Unit(benchmark::kMillisecond);

static void BM_RankGF2(benchmark::State& state) {
  size_t rows = state.range(0), cols = state.range(1);
  gf::Field f2 = gf::make_field(2, 1);
  Rng rng(2);
  linalg::MatrixFq m = linalg::random_matrix(f2, rows, cols, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::rank_of(m));
  }
}
BENCHMARK(BM_RankGF2)->Args({2048, 4096})->Args({8192, 16384})
    ->Unit(benchmark::kMillisecond);

static void BM_KernelGF4(benchmark::State& state) {
  size_t rows = state.range(0), cols = state.range(1);
  gf::Field f4 = gf::make_field(2, 2);
  Rng rng(3);
  linalg::MatrixFq m = linalg::random_matrix(f4, rows, cols, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::left_kernel_basis(m));
  }
}
BENCHMARK(BM_KernelGF4)->Args({512, 1024})->Args({1024, 4096})
    ->Unit(benchmark::kMillisecond);

static void BM_KernelGF3(benchmark::State& state) {
  size_t rows = state.range(0), cols = state.range(1);
  gf::Field f3 = gf::make_field(3, 1);
  Rng rng(4);
  linalg::MatrixFq m = linalg::random_matrix(f3, rows, cols, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::left_kernel_basis(m));
  }
}
BENCHMARK(BM_KernelGF3)->Args({256, 512})->Unit(benchmark::kMillisecond);
