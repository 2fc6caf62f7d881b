#include <benchmark/benchmark.h>

#include <pawn/enumerate.hpp>
#include <pawn/primes.hpp>
#include <pawn/subset_sum.hpp>
#include <pawn/weird.hpp>

#include <random>

namespace {

void BM_CounterColdRange(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        pawn::PrimeCounter counter(pawn::kDefaultSieveCeiling, 1u << 20);
        benchmark::DoNotOptimize(counter.count_closed(hi / 2, hi));
    }
}
BENCHMARK(BM_CounterColdRange)->Arg(1 << 22)->Arg(1 << 26)->Unit(benchmark::kMillisecond);

void BM_NextPrime(benchmark::State& state) {
    mpz_class x = 1;
    x <<= static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pawn::next_prime(x));
}
BENCHMARK(BM_NextPrime)->Arg(32)->Arg(63)->Arg(128)->Arg(256);

void BM_SubsetSumBitset(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> v(static_cast<std::size_t>(state.range(0)));
    for (auto& x : v) x = 1 + rng() % 100000;
    for (auto _ : state) benchmark::DoNotOptimize(pawn::subset_sums_to_bitset(v, 1000003));
}
BENCHMARK(BM_SubsetSumBitset)->Arg(16)->Arg(64);

void BM_IsWeird(benchmark::State& state) {
    const auto f = pawn::Factorization::parse("2^3*17*137*9349*2561627*3280965162749");
    for (auto _ : state) benchmark::DoNotOptimize(pawn::is_weird(f));
}
BENCHMARK(BM_IsWeird);

void BM_SfpanCount(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    pawn::sfpan_count(k, pawn::Factorization());  // fills the shared pi(x) table
    for (auto _ : state) benchmark::DoNotOptimize(pawn::sfpan_count(k, pawn::Factorization()));
}
BENCHMARK(BM_SfpanCount)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PndnCount(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    pawn::pndn_count(k, pawn::Factorization());
    for (auto _ : state) benchmark::DoNotOptimize(pawn::pndn_count(k, pawn::Factorization()));
}
BENCHMARK(BM_PndnCount)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SquareFreeSearch(benchmark::State& state) {
    pawn::SearchConfig cfg;
    cfg.seed = pawn::Factorization::parse("2^2");
    cfg.k = 5;
    cfg.amplitude = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pawn::pwn_search_squarefree(cfg, {}));
}
BENCHMARK(BM_SquareFreeSearch)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
