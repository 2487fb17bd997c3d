#include <benchmark/benchmark.h>

#include <random>

#include "exactkit/linear_system.hpp"
#include "exactkit/matrix.hpp"

using namespace exactkit;

namespace {

Matrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<Rational> e;
  for (std::size_t k = 0; k < n * m; ++k) e.emplace_back(Int(num(rng)), Int(den(rng)));
  return Matrix(n, m, std::move(e));
}

void BM_DetElimination(benchmark::State& state) {
  const Matrix a = random_matrix(state.range(0), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(a, DetMethod::Elimination));
}
BENCHMARK(BM_DetElimination)->DenseRange(2, 10, 2);

void BM_DetLaplace(benchmark::State& state) {
  const Matrix a = random_matrix(state.range(0), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(a, DetMethod::Laplace));
}
BENCHMARK(BM_DetLaplace)->DenseRange(2, 8, 2);

void BM_Inverse(benchmark::State& state) {
  const Matrix a = random_matrix(state.range(0), state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse)->DenseRange(2, 10, 2);

void BM_Rank(benchmark::State& state) {
  const Matrix a = random_matrix(state.range(0), state.range(0) + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->DenseRange(2, 10, 2);

void BM_Gauss(benchmark::State& state) {
  const LinearSystem sys = LinearSystem::from_augmented(random_matrix(state.range(0), state.range(0) + 1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(solve_gauss(sys));
}
BENCHMARK(BM_Gauss)->DenseRange(2, 10, 2);

void BM_Cramer(benchmark::State& state) {
  const LinearSystem sys = LinearSystem::from_augmented(random_matrix(state.range(0), state.range(0) + 1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(solve_cramer(sys));
}
BENCHMARK(BM_Cramer)->DenseRange(2, 8, 2);

}  // namespace
