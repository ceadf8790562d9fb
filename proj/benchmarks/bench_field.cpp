#include <benchmark/benchmark.h>

#include <wsieve/bounds.hpp>
#include <wsieve/domain.hpp>
#include <wsieve/field.hpp>

using namespace wsieve;

namespace {

void BM_CharacterProfile(benchmark::State& state) {
  const PrimeModulus p(static_cast<uint64_t>(state.range(0)));
  auto domain = ValuedDomain::units(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_profile(domain));
  }
}
BENCHMARK(BM_CharacterProfile)->Arg(101)->Arg(499)->Arg(1009);

void BM_MonomialExpSumSweep(benchmark::State& state) {
  const PrimeModulus p(static_cast<uint64_t>(state.range(0)));
  for (auto _ : state) {
    double total = 0;
    for (uint64_t a = 1; a < p.value(); ++a) {
      total += monomial_exp_sum(p, 3, a).magnitude;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MonomialExpSumSweep)->Arg(101)->Arg(499);

void BM_CheckZhuWan(benchmark::State& state) {
  const PrimeModulus p(31);
  auto table = count_odlyzko_stanley(p, 2, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_zhu_wan(p, 2, 8, table));
  }
}
BENCHMARK(BM_CheckZhuWan);

}  // namespace

BENCHMARK_MAIN();
