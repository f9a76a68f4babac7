// Serial reference kernels against their OpenMP counterparts.

#include "najc/higgs.hpp"
#include "najc/kernels.hpp"
#include "najc/model.hpp"
#include "najc/report.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace najc;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = ratio(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 3) + 1);
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::rref_serial(m));
}

void BM_RrefParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::rref_parallel(m));
}

void BM_ProductsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 4 * n, 1), b = random_matrix(n, 4 * n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::pairwise_products_serial(a, b));
}

void BM_ProductsParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 4 * n, 1), b = random_matrix(n, 4 * n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::pairwise_products_parallel(a, b));
}

void BM_Sweep(benchmark::State& state, Backend backend) {
  const AnalysisInput input = generate_random(7, 3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep(input, 32, 5, 10, backend));
}

void BM_Relations(benchmark::State& state, Backend backend) {
  const AnalysisInput input = generate_random(8, 4, 3);
  const Decomposition dec = analyze_hodge(input).decomposition;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_relations(dec, backend));
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_RrefParallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_ProductsSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_ProductsParallel)->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(BM_Sweep, serial, Backend::serial);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Backend::parallel);
BENCHMARK_CAPTURE(BM_Relations, serial, Backend::serial);
BENCHMARK_CAPTURE(BM_Relations, parallel, Backend::parallel);

BENCHMARK_MAIN();
