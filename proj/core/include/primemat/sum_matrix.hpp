// sum_matrix.hpp
// The prime-gated sum matrix of order n:
//
//   entry(i, j) = 2(i + j + 1)  if 2i+1 and 2j+1 are both prime
//               = 0             otherwise,         1 <= i, j <= n.
//
// The matrix is never materialised; a view holds only the odd-prime
// indicator. Anti-diagonal k (the cells with i + j = k + 1) carries the even
// number 2(k + 2) in every nonzero cell, so its nonzero count L(k) is the
// number of ordered odd-prime pairs summing to 2(k + 2) with both members at
// most 2n + 1.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "primemat/grid.hpp"
#include "primemat/primality.hpp"

namespace primemat {

class SumMatrixView {
public:
    explicit SumMatrixView(OddIndicator indicator) : indicator_(std::move(indicator)) {}
    SumMatrixView(const PrimalityTable& table, std::uint64_t n) : indicator_(odd_indicator(table, n)) {}

    std::uint64_t order() const noexcept { return indicator_.order(); }
    const OddIndicator& indicator() const noexcept { return indicator_; }

    // 1-based; throws RangeError outside [1, order()].
    std::uint64_t entry(std::uint64_t i, std::uint64_t j) const;

private:
    OddIndicator indicator_;
};

// Throws UsageError when order() > cap.
Grid render(const SumMatrixView& view, std::uint64_t cap = kDefaultRenderCap);

// L(1..2n-1) for a sum matrix of order n; values[k - 1] holds L(k).
struct CharSequence {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> values;

    // 1-based; throws RangeError.
    std::uint64_t at(std::uint64_t k) const;
    // The even number carried by anti-diagonal k.
    static constexpr std::uint64_t even_for(std::uint64_t k) noexcept { return 2 * (k + 2); }

    friend bool operator==(const CharSequence&, const CharSequence&) = default;
};

// O(n^2) walk over every anti-diagonal cell.
CharSequence char_sequence_scan(const SumMatrixView& view);

// Autocorrelation of the indicator, accumulated over pairs of prime indices
// only. Work is O(P^2) for P primes among 3..2n+1. Results do not depend on
// `threads`.
CharSequence char_sequence_fast(const OddIndicator& indicator, unsigned threads = 1);

// Order n from order n - 1. Each anti-diagonal n..2n-3 gains two cells when
// both 2n+1 and the partner are prime; the two new anti-diagonals hold
// 2[chi(n) chi(n-1)] and chi(n). Throws UsageError on an order mismatch and
// RangeError when 2n+1 exceeds the table.
CharSequence char_sequence_incremental(const CharSequence& prev, const PrimalityTable& table);

// In-place form of char_sequence_incremental.
void extend_char_sequence(CharSequence& seq, const PrimalityTable& table);

struct CornerSplit {
    std::vector<std::uint64_t> upper_left;   // L(1..n)
    std::vector<std::uint64_t> lower_right;  // L(n+1..2n-1)
};

CornerSplit corner_split(const CharSequence& seq);

// Zeros in the lower-right corner L(n+1..2n-1).
struct ZeroStats {
    std::uint64_t m0 = 0;
    std::optional<std::uint64_t> k0;  // overall index of the first zero
    double zero_ratio = 0.0;          // m0 / n
    std::optional<double> position_ratio;  // k0 / (2n - 1)

    friend bool operator==(const ZeroStats&, const ZeroStats&) = default;
};

ZeroStats zero_stats(const CharSequence& seq);

// Ordered pairs (p, q) of odd primes with p + q = even. Requires an even
// value >= 6 with even - 3 <= table.limit().
std::uint64_t ordered_partition_count(const PrimalityTable& table, std::uint64_t even);
std::vector<std::pair<std::uint64_t, std::uint64_t>> ordered_partitions(const PrimalityTable& table,
                                                                        std::uint64_t even);

// Grows a characteristic sequence one order at a time while keeping its
// zero statistics current, so a whole trajectory costs roughly the number of
// prime pairs rather than O(n^2) per step.
class CharSequenceBuilder {
public:
    CharSequenceBuilder() = default;

    // Order n -> n + 1.
    void advance(const PrimalityTable& table);

    std::uint64_t order() const noexcept { return seq_.order; }
    const CharSequence& sequence() const noexcept { return seq_; }
    ZeroStats stats() const;

private:
    CharSequence seq_;
    std::set<std::uint64_t> zeros_;  // zero positions inside L(n+1..2n-1)
};

}  // namespace primemat
