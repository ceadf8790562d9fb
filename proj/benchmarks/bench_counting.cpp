#include <benchmark/benchmark.h>

#include <wsieve/counting.hpp>

using namespace wsieve;

namespace {

ValuedDomain os_domain(uint64_t p, uint64_t m) {
  return ValuedDomain::power_instance(power_structure(PrimeModulus(p), m));
}

void BM_CountDp(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const uint64_t k = static_cast<uint64_t>(state.range(1));
  auto domain = os_domain(p, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_dp(domain, k));
  }
}
BENCHMARK(BM_CountDp)->Args({101, 8})->Args({499, 8});

void BM_CountGenfun(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const uint64_t k = static_cast<uint64_t>(state.range(1));
  auto domain = os_domain(p, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_genfun(domain, k));
  }
}
BENCHMARK(BM_CountGenfun)->Args({101, 8});

void BM_CountNewton(benchmark::State& state) {
  const uint64_t p = static_cast<uint64_t>(state.range(0));
  const uint64_t k = static_cast<uint64_t>(state.range(1));
  auto domain = os_domain(p, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_newton(domain, k));
  }
}
BENCHMARK(BM_CountNewton)->Args({101, 8})->Args({499, 8})->Args({499, 16});

void BM_TotalCount(benchmark::State& state) {
  const PrimeModulus p(static_cast<uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_count(p, 2));
  }
}
BENCHMARK(BM_TotalCount)->Arg(101)->Arg(499);

}  // namespace

BENCHMARK_MAIN();
