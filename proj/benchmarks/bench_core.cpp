#include <benchmark/benchmark.h>

#include "abundancy/bounds.hpp"
#include "abundancy/certificate.hpp"
#include "abundancy/factorization.hpp"
#include "abundancy/search.hpp"
#include "abundancy/sigma.hpp"

using namespace abundancy;

namespace {

void BM_sigma_small(benchmark::State& state) {
  Natural n(234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma(n));
  }
}
BENCHMARK(BM_sigma_small);

void BM_sigma_large(benchmark::State& state) {
  // 2^4 * 3^12 * 29^3 * 773, a certificate-shaped composite
  Natural n = pow_natural(Natural(2), 4) * pow_natural(Natural(3), 12) *
              pow_natural(Natural(29), 3) * 773;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma(n));
  }
}
BENCHMARK(BM_sigma_large);

void BM_factorize(benchmark::State& state) {
  Natural n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
  }
}
BENCHMARK(BM_factorize)->Arg(9699690)->Arg(225450225);

void BM_abundancy_index(benchmark::State& state) {
  Natural n(225450225);
  for (auto _ : state) {
    benchmark::DoNotOptimize(abundancy_index(n));
  }
}
BENCHMARK(BM_abundancy_index);

void BM_sieve_sigma(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_sigma(state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_sieve_sigma)->Arg(100000)->Arg(1000000)->Complexity();

void BM_brute_force_friends(benchmark::State& state) {
  Natural target(12);
  Natural bound(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_friends(target, bound));
  }
}
BENCHMARK(BM_brute_force_friends)->Arg(100000);

void BM_search_partitioned(benchmark::State& state) {
  Natural target(12);
  Natural bound(1000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_partitioned(target, bound, state.range(0)));
  }
}
BENCHMARK(BM_search_partitioned)->Arg(1)->Arg(2)->Arg(4);

void BM_two_prime_window(benchmark::State& state) {
  Natural q1(29);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_prime_window(q1));
  }
}
BENCHMARK(BM_two_prime_window);

void BM_certificate_replay(benchmark::State& state) {
  const auto& checks = builtin_friends_of_12_certificate();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_certificate(checks));
  }
}
BENCHMARK(BM_certificate_replay);

}  // namespace

BENCHMARK_MAIN();
