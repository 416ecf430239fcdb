// shifted_sets.hpp
// Shifted prime sets S_a = {k >= 1 : 2k + a is prime} for odd a, their
// intersections, and bounded witness searches. A search that finds nothing
// reports "absent", which only means "not found below the limit".

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primemat/primality.hpp"
#include "primemat/report.hpp"

namespace primemat {

// Threshold separating "large" witnesses from the trivial small ones.
inline constexpr std::uint64_t kLargeWitnessThreshold = 100;

struct ShiftedPrimeSet {
    std::uint64_t a = 0;
    std::uint64_t limit = 0;              // inclusive bound on k
    std::vector<std::uint64_t> members;   // strictly increasing

    bool contains(std::uint64_t k) const;
};

// Requires odd a >= 1 and 2 * limit + a <= table.limit().
ShiftedPrimeSet members(const PrimalityTable& table, std::uint64_t a, std::uint64_t limit);

// Checks k in S_{a+2} => k+1 in S_a and k in S_a, k >= 2 => k-1 in S_{a+2}
// for every member up to limit - 1.
ClaimReport check_shift_lemma(const PrimalityTable& table, std::uint64_t a, std::uint64_t limit);

// Same check over already-enumerated sets; `lower` is S_a and `upper` is
// S_{a+2}. Useful for checking sets that came from elsewhere.
ClaimReport check_shift_lemma(const ShiftedPrimeSet& lower, const ShiftedPrimeSet& upper);

// Sorted {k in [1, limit] : 2k + a and 2k + b both prime}.
std::vector<std::uint64_t> intersect(const PrimalityTable& table, std::uint64_t a, std::uint64_t b,
                                     std::uint64_t limit);

// Least k in (threshold, limit] lying in S_a and S_b.
std::optional<std::uint64_t> first_witness_above(const PrimalityTable& table, std::uint64_t a, std::uint64_t b,
                                                 std::uint64_t threshold, std::uint64_t limit);

// S_3 intersected with S_{2m+3}: the k with (2k + 3, 2k + 3 + 2m) a prime pair.
std::vector<std::uint64_t> base_three_witnesses(const PrimalityTable& table, std::uint64_t m, std::uint64_t limit);

struct WitnessCount {
    std::uint64_t m = 0;
    std::uint64_t count = 0;
    std::optional<std::uint64_t> first;

    friend bool operator==(const WitnessCount&, const WitnessCount&) = default;
};

// |S_3 cap S_{2m+3} cap [1, limit]| for every m in [1, m_max], in order.
std::vector<WitnessCount> base_three_witness_counts(const PrimalityTable& table, std::uint64_t m_max,
                                                    std::uint64_t limit, unsigned threads = 1);

// Least k > 0 with p + 2k and q + 2k both prime and k <= max_k (also bounded
// by the table). p and q must be odd primes, otherwise UsageError.
std::optional<std::uint64_t> lift_pair(const PrimalityTable& table, std::uint64_t p, std::uint64_t q,
                                       std::uint64_t max_k);

}  // namespace primemat
