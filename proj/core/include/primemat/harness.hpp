// harness.hpp
// Batch verification suites over a shared primality table. Every suite
// covers an explicit finite range and returns either "verified" for the whole
// range or the first counterexample in range order. Suites partition their
// range into a fixed set of chunks, so reports are identical for any thread
// count.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primemat/primality.hpp"
#include "primemat/report.hpp"

namespace primemat {

struct SuiteOptions {
    unsigned threads = 1;         // 0 = hardware concurrency
    std::size_t witness_cap = 8;  // witness rows kept per report, in range order
};

// Smallest odd prime p <= E/2 with E - p prime, as (p, E - p).
std::optional<std::pair<std::uint64_t, std::uint64_t>> goldbach_witness(const PrimalityTable& table,
                                                                        std::uint64_t even);

// Every even E in [6, max_even] is a sum of two odd primes.
// Witness rows: [E, p, q]. Counterexample: [E].
ClaimReport verify_goldbach(const PrimalityTable& table, std::uint64_t max_even, const SuiteOptions& options = {});

// For every m in [1, m_max], at least two prime pairs (p, p + 2m) with
// p + 2m <= 8m + 1. Witness rows: [m, p1, p2, q1, q2] with p1 - p2 = q1 - q2 = 2m.
// Counterexample: [m, pairs_found].
ClaimReport verify_diff_pairs(const PrimalityTable& table, std::uint64_t m_max, const SuiteOptions& options = {});

struct PairCensus {
    std::uint64_t gap = 0;
    std::uint64_t limit = 0;
    std::uint64_t count = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // empty unless requested
};

// Prime pairs (p, p + gap) with p odd and p + gap <= limit.
PairCensus polignac_census(const PrimalityTable& table, std::uint64_t gap, std::uint64_t limit,
                           bool collect_pairs = false);

// For every prime 7 < p <= p_max there is a twin pair (q, q + 2) with p < q and
// q + 2 <= 2p. Witness rows: [p, q, q + 2]. Counterexample: [p].
ClaimReport verify_twin_between(const PrimalityTable& table, std::uint64_t p_max, const SuiteOptions& options = {});

enum class Family { sum, diff };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

// For the sum family count/position are m0/k0 and mu = m0/n, nu = k0/(2n-1);
// for the diff family they are alpha/t with mu = alpha/(n-1), nu = t/(n-1).
struct StatRow {
    std::uint64_t n = 0;
    std::uint64_t count = 0;
    std::optional<std::uint64_t> position;
    double mu = 0.0;
    std::optional<double> nu;
};

struct StatSeries {
    Family family = Family::sum;
    std::vector<StatRow> rows;
};

// Rows at n = step, 2 step, ... <= n_max, built incrementally. The diff
// family has no statistics at n = 1, so that row is skipped.
StatSeries mu_nu_series(const PrimalityTable& table, Family family, std::uint64_t n_max, std::uint64_t step);

// Header "n,m0,k0,mu,nu" or "n,alpha,t,mu,nu"; absent values are empty fields.
std::string to_csv(const StatSeries& series);

// Chained incremental sequences must equal freshly computed ones at every
// n <= n_max, each step's deltas must fall in the allowed branch sets, and the
// corner statistics may only move as the recurrence permits.
// Counterexample: [n, position, kind] with kind 0 = mismatch against the
// fresh sequence, 1 = delta outside its branch set, 2 = statistics moved
// outside their bounds.
ClaimReport recurrence_consistency(const PrimalityTable& table, Family family, std::uint64_t n_max,
                                   const SuiteOptions& options = {});

// Bounds used by verify_all for a table of the given limit.
struct SuiteBounds {
    std::uint64_t max_even = 0;
    std::uint64_t m_max = 0;
    std::uint64_t p_max = 0;
    std::uint64_t recurrence_n_max = 0;
};

inline constexpr std::uint64_t kRecurrenceCap = 5000;
inline constexpr std::uint64_t kMinSuiteLimit = 17;

// Throws UsageError when limit < kMinSuiteLimit.
SuiteBounds suite_bounds(std::uint64_t limit);

// goldbach, diffpairs, twin-between, recurrence (sum), recurrence (diff), each
// over the ranges suite_bounds(limit) derives. The table must reach limit.
std::vector<ClaimReport> verify_all(const PrimalityTable& table, std::uint64_t limit, const SuiteOptions& options = {});

}  // namespace primemat
