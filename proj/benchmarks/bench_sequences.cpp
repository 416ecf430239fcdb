#include <benchmark/benchmark.h>

#include "primemat/diff_matrix.hpp"
#include "primemat/sum_matrix.hpp"

namespace {

const primemat::PrimalityTable& table() {
    static const auto t = primemat::build_table(1'000'001);
    return t;
}

}  // namespace

static void BM_CharScan(benchmark::State& state) {
    const primemat::SumMatrixView view(table(), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(primemat::char_sequence_scan(view));
}
BENCHMARK(BM_CharScan)->Arg(500)->Arg(2000);

static void BM_CharFast(benchmark::State& state) {
    const auto chi = primemat::odd_indicator(table(), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(primemat::char_sequence_fast(chi));
}
BENCHMARK(BM_CharFast)->Arg(500)->Arg(2000)->Arg(20000);

static void BM_MasterScan(benchmark::State& state) {
    const primemat::DiffMatrixView view(table(), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(primemat::master_sequence_scan(view));
}
BENCHMARK(BM_MasterScan)->Arg(500)->Arg(2000);

static void BM_MasterFast(benchmark::State& state) {
    const auto chi = primemat::odd_indicator(table(), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(primemat::master_sequence_fast(chi));
}
BENCHMARK(BM_MasterFast)->Arg(500)->Arg(2000)->Arg(20000);

static void BM_CharBuilder(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        primemat::CharSequenceBuilder b;
        for (std::uint64_t i = 0; i < n; ++i) b.advance(table());
        benchmark::DoNotOptimize(b.stats());
    }
}
BENCHMARK(BM_CharBuilder)->Arg(10000)->Unit(benchmark::kMillisecond);
