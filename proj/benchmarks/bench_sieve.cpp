#include <benchmark/benchmark.h>

#include "primemat/primality.hpp"

static void BM_SievePlain(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(primemat::build_table(limit));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SievePlain)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

static void BM_SieveSegmented(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    primemat::SieveOptions opts;
    opts.segment_threshold = 0;
    for (auto _ : state) benchmark::DoNotOptimize(primemat::build_table(limit, opts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveSegmented)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

static void BM_Serialize(benchmark::State& state) {
    const auto table = primemat::build_table(1 << 24);
    for (auto _ : state) benchmark::DoNotOptimize(primemat::deserialize_table(primemat::serialize_table(table)));
}
BENCHMARK(BM_Serialize)->Unit(benchmark::kMillisecond);
