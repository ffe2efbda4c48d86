#include <benchmark/benchmark.h>

#include "syzkit/distinguisher.hpp"

using namespace syzkit;

static void BM_StrandHamming(benchmark::State& state) {
  codes::LinearCode c = codes::hamming_7_4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(syzygy::linear_strand(c));
  }
}
BENCHMARK(BM_StrandHamming)->Unit(benchmark::kMicrosecond);

static void BM_StrandTernaryGolay(benchmark::State& state) {
  codes::LinearCode c = codes::ternary_golay();
  for (auto _ : state) {
    benchmark::DoNotOptimize(syzygy::linear_strand(c));
  }
}
BENCHMARK(BM_StrandTernaryGolay)->Unit(benchmark::kMillisecond);

static void BM_StrandParity(benchmark::State& state) {
  codes::LinearCode c = codes::parity_code(state.range(0), gf::make_field(2, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(syzygy::linear_strand(c));
  }
}
BENCHMARK(BM_StrandParity)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_BinaryGolayToDegree(benchmark::State& state) {
  codes::LinearCode c = codes::binary_golay();
  syzygy::StrandOptions opt;
  opt.max_degree = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(syzygy::linear_strand(c, opt));
  }
}
BENCHMARK(BM_BinaryGolayToDegree)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Goppa444Calibration(benchmark::State& state) {
  codes::FamilySpec spec;
  spec.family = codes::CodeFamily::goppa_dual;
  spec.mode = codes::GoppaMode::irr;
  spec.q = 4;
  spec.m = 4;
  spec.t = 4;
  for (auto _ : state) {
    Rng rng(1);
    benchmark::DoNotOptimize(dist::calibrate(spec, 1, 5, 0, rng));
  }
}
BENCHMARK(BM_Goppa444Calibration)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
