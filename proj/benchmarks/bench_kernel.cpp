#include <benchmark/benchmark.h>

#include "exactkit/combinatorics.hpp"
#include "exactkit/logic.hpp"
#include "exactkit/magma.hpp"
#include "exactkit/number_theory.hpp"

using namespace exactkit;

namespace {

void BM_GcdFibonacci(benchmark::State& state) {
  // Consecutive Fibonacci numbers are the worst case for Euclid.
  Int a = 1, b = 1;
  for (int k = 0; k < state.range(0); ++k) {
    Int c = a + b;
    a = b;
    b = c;
  }
  for (auto _ : state) benchmark::DoNotOptimize(gcd(b, a));
}
BENCHMARK(BM_GcdFibonacci)->Arg(50)->Arg(500);

void BM_Binom(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binom(state.range(0), state.range(0) / 2));
}
BENCHMARK(BM_Binom)->Arg(20)->Arg(200)->Arg(2000);

void BM_TruthTable(benchmark::State& state) {
  std::string text = "a0";
  for (int i = 1; i < state.range(0); ++i) text += " -> a" + std::to_string(i);
  const logic::Formula f = logic::parse_formula(text);
  for (auto _ : state) benchmark::DoNotOptimize(logic::truth_table(f));
}
BENCHMARK(BM_TruthTable)->Arg(4)->Arg(10)->Arg(16);

void BM_ClassifyModularAddition(benchmark::State& state) {
  const Magma m = modular_addition(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_structure(m));
}
BENCHMARK(BM_ClassifyModularAddition)->Arg(8)->Arg(32)->Arg(64);

}  // namespace
