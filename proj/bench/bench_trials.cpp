// Serial reference executor vs the OpenMP executor on the theorem suites,
// plus the two hot kernels they spend their time in.

#include <benchmark/benchmark.h>

#include "grassmann/verification.hpp"

namespace {

using namespace grassmann;

constexpr std::uint64_t kSeed = 20261019;

void run_suite(benchmark::State& state, Theorem theorem, DomainKind kind, Execution execution) {
  const int n = static_cast<int>(state.range(0));
  const auto trials = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    auto results = run_trials(
        trials, kSeed,
        [&](std::size_t i, std::uint64_t s) { return random_trial(theorem, kind, n, 2 * n, kSeed, i, s); }, execution);
    benchmark::DoNotOptimize(results);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(1));
  state.counters["threads"] = execution == Execution::Serial ? 1 : max_threads();
}

void BM_CayleyHamiltonSerial(benchmark::State& state) {
  run_suite(state, Theorem::CayleyHamilton, DomainKind::MaxPlus, Execution::Serial);
}
void BM_CayleyHamiltonParallel(benchmark::State& state) {
  run_suite(state, Theorem::CayleyHamilton, DomainKind::MaxPlus, Execution::Parallel);
}
void BM_QuasiInverseSerial(benchmark::State& state) {
  run_suite(state, Theorem::QuasiInverse, DomainKind::Integers, Execution::Serial);
}
void BM_QuasiInverseParallel(benchmark::State& state) {
  run_suite(state, Theorem::QuasiInverse, DomainKind::Integers, Execution::Parallel);
}

void BM_HsCoefficient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  InstanceGenerator gen(DomainKind::Integers, kSeed);
  const Endomorphism f = gen.endomorphism(n);
  const MultiVector zeta = MultiVector::basis_word(n, DomainKind::Integers, Word::top(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs_coefficient(f, k, zeta));
  }
}

void BM_Wedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  InstanceGenerator gen(DomainKind::MaxPlus, kSeed);
  const MultiVector a = gen.homogeneous(n, 2, 6);
  const MultiVector b = gen.homogeneous(n, 2, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(a, b));
  }
}

}  // namespace

BENCHMARK(BM_CayleyHamiltonSerial)->Args({3, 32})->Args({4, 32})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyHamiltonParallel)->Args({3, 32})->Args({4, 32})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuasiInverseSerial)->Args({3, 32})->Args({4, 32})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuasiInverseParallel)->Args({3, 32})->Args({4, 32})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HsCoefficient)->Args({4, 4})->Args({4, 8})->Args({5, 10});
BENCHMARK(BM_Wedge)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
