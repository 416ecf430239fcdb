// diff_matrix.hpp
// The prime-gated difference matrix of order n:
//
//   entry(i, j) = 2|i - j|  if 2i+1 and 2j+1 are both prime, else 0.
//
// Superdiagonal k (cells with j - i = k - 1) carries the gap 2(k - 1) in each
// nonzero cell; its positive count f(k) is the number of prime pairs
// (q, q + 2(k - 1)) with 3 <= q and q + 2(k - 1) <= 2n + 1.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "primemat/grid.hpp"
#include "primemat/primality.hpp"

namespace primemat {

class DiffMatrixView {
public:
    explicit DiffMatrixView(OddIndicator indicator) : indicator_(std::move(indicator)) {}
    DiffMatrixView(const PrimalityTable& table, std::uint64_t n) : indicator_(odd_indicator(table, n)) {}

    std::uint64_t order() const noexcept { return indicator_.order(); }
    const OddIndicator& indicator() const noexcept { return indicator_; }

    std::uint64_t entry(std::uint64_t i, std::uint64_t j) const;

private:
    OddIndicator indicator_;
};

Grid render(const DiffMatrixView& view, std::uint64_t cap = kDefaultRenderCap);

// f(1..n); values[k - 1] holds f(k). f(1) is always zero.
struct MasterSequence {
    std::uint64_t order = 0;
    std::vector<std::uint64_t> values;

    std::uint64_t at(std::uint64_t k) const;
    static constexpr std::uint64_t gap_for(std::uint64_t k) noexcept { return 2 * (k - 1); }

    friend bool operator==(const MasterSequence&, const MasterSequence&) = default;
};

MasterSequence master_sequence_scan(const DiffMatrixView& view);

// Counts over pairs of prime indices only; independent of `threads`.
MasterSequence master_sequence_fast(const OddIndicator& indicator, unsigned threads = 1);

// Order n from order n - 1: when 2n+1 is composite nothing moves and f(n) = 0;
// otherwise f(k) gains one for every prime 2(n-k+1)+1, and f(n) = 1.
MasterSequence master_sequence_incremental(const MasterSequence& prev, const PrimalityTable& table);
void extend_master_sequence(MasterSequence& seq, const PrimalityTable& table);

// Values <= 1 within the subsequence f(2..n). Positions are offsets inside
// that subsequence, so k = 2 is position 1 and t = k - 1.
struct AlmostStats {
    std::uint64_t alpha = 0;
    std::optional<std::uint64_t> t;
    double mu = 0.0;              // alpha / (n - 1)
    std::optional<double> nu;     // t / (n - 1)

    friend bool operator==(const AlmostStats&, const AlmostStats&) = default;
};

// Requires order >= 2.
AlmostStats almost_stats(const MasterSequence& seq);

// #{q odd prime : q + gap <= limit, q + gap prime}. gap must be positive and
// even; limit must not exceed the table.
std::uint64_t gap_pair_count(const PrimalityTable& table, std::uint64_t gap, std::uint64_t limit);
std::vector<std::pair<std::uint64_t, std::uint64_t>> gap_pairs(const PrimalityTable& table, std::uint64_t gap,
                                                               std::uint64_t limit);

class MasterSequenceBuilder {
public:
    void advance(const PrimalityTable& table);

    std::uint64_t order() const noexcept { return seq_.order; }
    const MasterSequence& sequence() const noexcept { return seq_; }
    AlmostStats stats() const;

private:
    MasterSequence seq_;
    std::set<std::uint64_t> small_;  // k in [2, n] with f(k) <= 1
};

}  // namespace primemat
