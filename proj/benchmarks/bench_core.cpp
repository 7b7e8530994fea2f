#include <benchmark/benchmark.h>

#include <random>

#include "loophh/crossed_product.hpp"
#include "loophh/hochschild.hpp"
#include "loophh/koszul.hpp"
#include "loophh/linalg.hpp"
#include "loophh/relforms.hpp"

using namespace loophh;

namespace {

SparseMatrix random_integer_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 4 == 0) m.set(r, c, Scalar(static_cast<long>(rng() % 19) - 9));
  return m;
}

void BM_RankSparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix m = random_integer_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, EliminationOptions{0}));
}
BENCHMARK(BM_RankSparse)->Arg(32)->Arg(64)->Arg(128);

void BM_RankDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix m = random_integer_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, EliminationOptions{1u << 20}));
}
BENCHMARK(BM_RankDense)->Arg(32)->Arg(64)->Arg(128);

void BM_TwistedKoszul(benchmark::State& state) {
  const CoordinateSpace c2 = CoordinateSpace::complex_pairs(2);
  const Matrix h = Matrix::diagonal({Scalar::root_of_unity(3), Scalar::root_of_unity(3, 2)});
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology(build_twisted_koszul(c2, h, nmax), 4, nmax));
}
BENCHMARK(BM_TwistedKoszul)->Arg(3)->Arg(5);

void BM_BarOracle(benchmark::State& state) {
  const CoordinateSpace r2 = CoordinateSpace::real(2);
  const Matrix h = Matrix::diagonal({Scalar(-1), Scalar(-1)});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_twisted_hh(r2, h, 1, n));
}
BENCHMARK(BM_BarOracle)->Arg(3)->Arg(4);

void BM_CrossedProductZ4(benchmark::State& state) {
  const FiniteGroup g =
      close_generators(CoordinateSpace::complex_pairs(1), {Matrix::diagonal({Scalar::root_of_unity(4)})});
  for (auto _ : state) benchmark::DoNotOptimize(crossed_product_hh_finite(g, 2, 4));
}
BENCHMARK(BM_CrossedProductZ4);

void BM_BasicFormsTable(benchmark::State& state) {
  const CircleAction a = CircleAction::make({2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(basic_forms_table(a, 2, 4, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BasicFormsTable)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
