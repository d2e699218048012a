#include <benchmark/benchmark.h>

#include <random>

#include "xl/elimination.hpp"
#include "xl/macaulay.hpp"
#include "xl/random.hpp"

namespace {

xl::DenseMatrix random_matrix(std::size_t rows, std::size_t cols, const xl::PrimeField& f) {
  std::mt19937_64 rng(rows * 1000 + cols);
  xl::DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = xl::FieldElement{xl::uniform_below(rng, f.modulus())};
  return m;
}

template <xl::Execution E>
void BM_random(benchmark::State& state) {
  const xl::PrimeField f(3109);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n + n / 2, f);
  for (auto _ : state) {
    auto work = m;
    benchmark::DoNotOptimize(xl::row_reduce(work, f, E).rank);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.rows() * m.cols()));
}

// The largest matrix of the experiment table: p=5011, d=6, n=3 at D=18.
template <xl::Execution E>
void BM_macaulay(benchmark::State& state) {
  const xl::PrimeField f(5011);
  const auto sys = xl::random_system(3, 1, 6, f, 1);
  const auto matrix = xl::build_macaulay(sys, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto work = matrix.entries;
    benchmark::DoNotOptimize(xl::row_reduce(work, f, E).rank);
  }
  state.counters["rows"] = static_cast<double>(matrix.entries.rows());
  state.counters["cols"] = static_cast<double>(matrix.entries.cols());
}

}  // namespace

BENCHMARK(BM_random<xl::Execution::Serial>)->Arg(100)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_random<xl::Execution::Parallel>)->Arg(100)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_macaulay<xl::Execution::Serial>)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_macaulay<xl::Execution::Parallel>)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
