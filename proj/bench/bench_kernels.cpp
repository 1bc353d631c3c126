// Serial reference kernels against their OpenMP counterparts. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "catmag/generators.hpp"
#include "catmag/kernels.hpp"
#include "catmag/linalg.hpp"
#include "catmag/magnitude.hpp"

namespace {

using catmag::Matrix;
using catmag::Rational;
namespace kernels = catmag::kernels;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-999, 999), den(1, 99);
  Matrix m(rows, cols);
  for (auto& x : m.data()) x = Rational::make(num(rng), den(rng));
  return m;
}

template <bool Parallel>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix c(n, n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::multiply(a.data(), b.data(), c.data(), n, n, n);
    } else {
      kernels::serial::multiply(a.data(), b.data(), c.data(), n, n, n);
    }
    benchmark::DoNotOptimize(c.data().data());
  }
}

template <bool Parallel>
void BM_EliminateColumn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix base = random_matrix(n, n, 3);
  const Rational inv = base(0, 0).reciprocal();
  for (std::size_t j = 0; j < n; ++j) base(0, j) *= inv;
  for (auto _ : state) {
    state.PauseTiming();
    Matrix m = base;
    state.ResumeTiming();
    if constexpr (Parallel) {
      kernels::parallel::eliminate_column(m.data(), {n, n}, 0, 0);
    } else {
      kernels::serial::eliminate_column(m.data(), {n, n}, 0, 0);
    }
    benchmark::DoNotOptimize(m.data().data());
  }
}

template <bool Parallel>
void BM_TransitiveClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<unsigned char> base(n * n, 0);
  std::mt19937_64 rng(4);
  std::bernoulli_distribution edge(2.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) base[i * n + j] = edge(rng) ? 1 : 0;
  for (auto _ : state) {
    std::vector<unsigned char> rel = base;
    if constexpr (Parallel) {
      kernels::parallel::transitive_closure(rel, n);
    } else {
      kernels::serial::transitive_closure(rel, n);
    }
    benchmark::DoNotOptimize(rel.data());
  }
}

template <bool Parallel>
void BM_Kronecker(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 5), b = random_matrix(n, n, 6);
  Matrix out(n * n, n * n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::kronecker(a.data(), {n, n}, b.data(), {n, n}, out.data());
    } else {
      kernels::serial::kronecker(a.data(), {n, n}, b.data(), {n, n}, out.data());
    }
    benchmark::DoNotOptimize(out.data().data());
  }
}

void BM_Pinv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(catmag::pinv(a));
}

void BM_DivisorMagnitude(benchmark::State& state) {
  const auto p = catmag::gen_divisors(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(catmag::magnitude_of_category(p));
}

BENCHMARK(BM_Multiply<false>)->Name("multiply/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_Multiply<true>)->Name("multiply/parallel")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_EliminateColumn<false>)->Name("eliminate/serial")->Arg(64)->Arg(128);
BENCHMARK(BM_EliminateColumn<true>)->Name("eliminate/parallel")->Arg(64)->Arg(128);
BENCHMARK(BM_TransitiveClosure<false>)->Name("closure/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_TransitiveClosure<true>)->Name("closure/parallel")->Arg(128)->Arg(512);
BENCHMARK(BM_Kronecker<false>)->Name("kronecker/serial")->Arg(8)->Arg(12);
BENCHMARK(BM_Kronecker<true>)->Name("kronecker/parallel")->Arg(8)->Arg(12);
BENCHMARK(BM_Pinv)->Name("pinv")->Arg(8)->Arg(12)->Arg(20);
BENCHMARK(BM_DivisorMagnitude)->Name("divisors_magnitude")->Arg(60)->Arg(360);

}  // namespace

BENCHMARK_MAIN();
