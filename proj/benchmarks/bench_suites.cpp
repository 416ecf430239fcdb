#include <benchmark/benchmark.h>

#include "primemat/harness.hpp"

namespace {

const primemat::PrimalityTable& table() {
    static const auto t = primemat::build_table(10'000'000);
    return t;
}

}  // namespace

static void BM_Goldbach(benchmark::State& state) {
    primemat::SuiteOptions opts;
    opts.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(primemat::verify_goldbach(table(), static_cast<std::uint64_t>(state.range(0)), opts));
}
BENCHMARK(BM_Goldbach)->Args({1'000'000, 1})->Args({10'000'000, 1})->Unit(benchmark::kMillisecond);

static void BM_DiffPairs(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(primemat::verify_diff_pairs(table(), static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_DiffPairs)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Series(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(primemat::mu_nu_series(table(), primemat::Family::diff,
                                                        static_cast<std::uint64_t>(state.range(0)), 1));
}
BENCHMARK(BM_Series)->Arg(100000)->Unit(benchmark::kMillisecond);
