// Microbenchmarks for the two integer evaluation strategies and the
// symbolic building blocks. Not wired into ctest; run dixon_bench directly.

#include <benchmark/benchmark.h>

#include "dixon/dixon.hpp"

namespace {

using dixon::BigInt;
using dixon::EvalStrategy;

void BM_LucasRecurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto target = dixon::eval_target(dixon::FamilyId::Lucas, 1);
  for (auto _ : state) {
    BigInt v = dixon::eval_by(EvalStrategy::recurrence, target, n);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_LucasRecurrence)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_LucasMatrixPow(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto target = dixon::eval_target(dixon::FamilyId::Lucas, 1);
  for (auto _ : state) {
    BigInt v = dixon::eval_by(EvalStrategy::matrix_pow, target, n);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_LucasMatrixPow)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_DicksonRecurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto target = dixon::eval_target_dixon(2, -1, 3, 2);
  for (auto _ : state) {
    BigInt v = dixon::eval_by(EvalStrategy::recurrence, target, n);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_DicksonRecurrence)->Arg(1000)->Arg(10000);

void BM_DicksonMatrixPow(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto target = dixon::eval_target_dixon(2, -1, 3, 2);
  for (auto _ : state) {
    BigInt v = dixon::eval_by(EvalStrategy::matrix_pow, target, n);
    benchmark::DoNotOptimize(v.get_mpz_t());
  }
}
BENCHMARK(BM_DicksonMatrixPow)->Arg(1000)->Arg(10000);

void BM_FamilyRecurrencePoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto p = dixon::family_recurrence(dixon::FamilyId::DicksonReg1, n);
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_FamilyRecurrencePoly)->Arg(16)->Arg(64)->Arg(256);

void BM_CompanionPow(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto m = dixon::companion(dixon::FamilyId::DicksonReg1);
  for (auto _ : state) {
    auto p = m.pow(n);
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_CompanionPow)->Arg(16)->Arg(64)->Arg(256);

void BM_CompanionSymPower(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto m = dixon::companion(dixon::FamilyId::DicksonReg2);
  for (auto _ : state) {
    auto p = m.sym_power(n);
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_CompanionSymPower)->Arg(8)->Arg(32)->Arg(64);

void BM_PolyMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = dixon::dixon_recurrence(2, -1, n);
  const auto b = dixon::dixon_recurrence(1, -1, n);
  for (auto _ : state) {
    auto p = a * b;
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
