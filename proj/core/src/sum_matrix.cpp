#include "primemat/sum_matrix.hpp"

#include <string>

#include "primemat/errors.hpp"
#include "primemat/parallel.hpp"

namespace primemat {
namespace {

void check_partition_args(const PrimalityTable& table, std::uint64_t even) {
    if (even < 6 || even % 2 != 0) throw_usage("partition count: expected an even number >= 6, got " + std::to_string(even));
    if (even - 3 > table.limit())
        throw_range("partition count: " + std::to_string(even) + " - 3 exceeds table limit " +
                    std::to_string(table.limit()));
}

// Applies the order n-1 -> n update to `values` (already sized 2n - 1).
// Calls touched(j) for every position j in [n, 2n-3] that changed.
template <typename Touched>
void apply_step(std::vector<std::uint64_t>& values, std::uint64_t n, const PrimalityTable& table, Touched&& touched) {
    const bool chi_n = table.test(2 * n + 1);
    if (!chi_n) return;
    if (n >= 3) {
        // partners i = 1..n-2 sit on anti-diagonal j = n + i - 1
        table.for_each_prime(3, 2 * (n - 2) + 1, [&](std::uint64_t p) {
            const std::uint64_t j = n + (p - 1) / 2 - 1;
            values[j - 1] += 2;
            touched(j);
            return true;
        });
    }
    if (n >= 2 && table.test(2 * n - 1)) values[2 * n - 3] = 2;
    values[2 * n - 2] = 1;
}

}  // namespace

std::uint64_t SumMatrixView::entry(std::uint64_t i, std::uint64_t j) const {
    const auto n = order();
    if (i < 1 || j < 1 || i > n || j > n)
        throw_range("sum matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside order " +
                    std::to_string(n));
    return indicator_[i] && indicator_[j] ? 2 * (i + j + 1) : 0;
}

Grid render(const SumMatrixView& view, std::uint64_t cap) {
    const auto n = view.order();
    if (n > cap) throw_usage("render: order " + std::to_string(n) + " exceeds render cap " + std::to_string(cap));
    Grid grid(n, std::vector<std::uint64_t>(n));
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = 1; j <= n; ++j) grid[i - 1][j - 1] = view.entry(i, j);
    return grid;
}

std::uint64_t CharSequence::at(std::uint64_t k) const {
    if (k < 1 || k > values.size())
        throw_range("characteristic index " + std::to_string(k) + " outside [1, " + std::to_string(values.size()) + "]");
    return values[k - 1];
}

CharSequence char_sequence_scan(const SumMatrixView& view) {
    const auto n = view.order();
    const auto& chi = view.indicator();
    CharSequence seq{n, std::vector<std::uint64_t>(n == 0 ? 0 : 2 * n - 1, 0)};
    for (std::uint64_t k = 1; k + 1 <= 2 * n; ++k) {
        const std::uint64_t lo = k + 1 > n ? k + 1 - n : 1;
        const std::uint64_t hi = k < n ? k : n;
        std::uint64_t count = 0;
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (chi[i] && chi[k + 1 - i]) ++count;
        seq.values[k - 1] = count;
    }
    return seq;
}

CharSequence char_sequence_fast(const OddIndicator& indicator, unsigned threads) {
    const auto n = indicator.order();
    const auto& idx = indicator.prime_indices();
    CharSequence seq{n, std::vector<std::uint64_t>(n == 0 ? 0 : 2 * n - 1, 0)};
    if (idx.empty()) return seq;

    // Outer index a pairs with every b >= a; chunk over a and sum partials.
    const auto partials = map_chunks(0, idx.size(), 4 * resolve_threads(threads), threads, [&](Chunk c) {
        std::vector<std::uint64_t> acc(seq.values.size(), 0);
        for (std::uint64_t x = c.begin; x < c.end; ++x) {
            const std::uint64_t a = idx[x];
            acc[2 * a - 2] += 1;
            for (std::uint64_t y = x + 1; y < idx.size(); ++y) acc[a + idx[y] - 2] += 2;
        }
        return acc;
    });
    for (const auto& acc : partials)
        for (std::size_t k = 0; k < acc.size(); ++k) seq.values[k] += acc[k];
    return seq;
}

void extend_char_sequence(CharSequence& seq, const PrimalityTable& table) {
    if (seq.values.size() != (seq.order == 0 ? 0 : 2 * seq.order - 1))
        throw_usage("extend_char_sequence: sequence length does not match its order");
    const std::uint64_t n = seq.order + 1;
    if (2 * n + 1 > table.limit())
        throw_range("extend_char_sequence: 2n+1 = " + std::to_string(2 * n + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));
    seq.values.resize(2 * n - 1, 0);
    apply_step(seq.values, n, table, [](std::uint64_t) {});
    seq.order = n;
}

CharSequence char_sequence_incremental(const CharSequence& prev, const PrimalityTable& table) {
    CharSequence next = prev;
    extend_char_sequence(next, table);
    return next;
}

CornerSplit corner_split(const CharSequence& seq) {
    const auto n = seq.order;
    CornerSplit split;
    split.upper_left.assign(seq.values.begin(), seq.values.begin() + static_cast<std::ptrdiff_t>(n));
    split.lower_right.assign(seq.values.begin() + static_cast<std::ptrdiff_t>(n), seq.values.end());
    return split;
}

ZeroStats zero_stats(const CharSequence& seq) {
    ZeroStats stats;
    const auto n = seq.order;
    for (std::uint64_t j = n + 1; j + 1 <= 2 * n; ++j) {
        if (seq.values[j - 1] != 0) continue;
        ++stats.m0;
        if (!stats.k0) stats.k0 = j;
    }
    if (n > 0) stats.zero_ratio = static_cast<double>(stats.m0) / static_cast<double>(n);
    if (stats.k0) stats.position_ratio = static_cast<double>(*stats.k0) / static_cast<double>(2 * n - 1);
    return stats;
}

std::uint64_t ordered_partition_count(const PrimalityTable& table, std::uint64_t even) {
    check_partition_args(table, even);
    std::uint64_t count = 0;
    table.for_each_prime(3, even - 3, [&](std::uint64_t p) {
        if (table.test(even - p)) ++count;
        return true;
    });
    return count;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ordered_partitions(const PrimalityTable& table,
                                                                        std::uint64_t even) {
    check_partition_args(table, even);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    table.for_each_prime(3, even - 3, [&](std::uint64_t p) {
        if (table.test(even - p)) out.emplace_back(p, even - p);
        return true;
    });
    return out;
}

void CharSequenceBuilder::advance(const PrimalityTable& table) {
    const std::uint64_t n = seq_.order + 1;
    if (2 * n + 1 > table.limit())
        throw_range("CharSequenceBuilder: 2n+1 = " + std::to_string(2 * n + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));
    // Position n moves from the lower-right window into the upper-left corner.
    zeros_.erase(n);
    seq_.values.resize(2 * n - 1, 0);
    apply_step(seq_.values, n, table, [&](std::uint64_t j) { zeros_.erase(j); });
    seq_.order = n;
    for (std::uint64_t j = n >= 2 ? 2 * n - 2 : 1; j <= 2 * n - 1; ++j)
        if (j >= n + 1 && seq_.values[j - 1] == 0) zeros_.insert(j);
}

ZeroStats CharSequenceBuilder::stats() const {
    ZeroStats stats;
    const auto n = seq_.order;
    stats.m0 = zeros_.size();
    if (!zeros_.empty()) stats.k0 = *zeros_.begin();
    if (n > 0) stats.zero_ratio = static_cast<double>(stats.m0) / static_cast<double>(n);
    if (stats.k0) stats.position_ratio = static_cast<double>(*stats.k0) / static_cast<double>(2 * n - 1);
    return stats;
}

}  // namespace primemat
