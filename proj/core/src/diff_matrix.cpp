#include "primemat/diff_matrix.hpp"

#include <string>

#include "primemat/errors.hpp"
#include "primemat/parallel.hpp"

namespace primemat {
namespace {

template <typename Touched>
void apply_step(std::vector<std::uint64_t>& values, std::uint64_t n, const PrimalityTable& table, Touched&& touched) {
    if (!table.test(2 * n + 1)) return;
    // partner index i in [2, n-1] lands on superdiagonal k = n - i + 1
    if (n >= 3) {
        table.for_each_prime(5, 2 * (n - 1) + 1, [&](std::uint64_t p) {
            const std::uint64_t k = n - (p - 1) / 2 + 1;
            values[k - 1] += 1;
            touched(k);
            return true;
        });
    }
    if (n >= 2) values[n - 1] = table.test(3) ? 1 : 0;
}

void check_extend(const MasterSequence& seq, const PrimalityTable& table) {
    if (seq.values.size() != seq.order) throw_usage("master sequence length does not match its order");
    const std::uint64_t n = seq.order + 1;
    if (2 * n + 1 > table.limit())
        throw_range("master sequence: 2n+1 = " + std::to_string(2 * n + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));
}

AlmostStats make_stats(std::uint64_t n, std::uint64_t alpha, std::optional<std::uint64_t> first_k) {
    AlmostStats s;
    s.alpha = alpha;
    if (first_k) s.t = *first_k - 1;
    s.mu = static_cast<double>(alpha) / static_cast<double>(n - 1);
    if (s.t) s.nu = static_cast<double>(*s.t) / static_cast<double>(n - 1);
    return s;
}

}  // namespace

std::uint64_t DiffMatrixView::entry(std::uint64_t i, std::uint64_t j) const {
    const auto n = order();
    if (i < 1 || j < 1 || i > n || j > n)
        throw_range("diff matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside order " +
                    std::to_string(n));
    if (!indicator_[i] || !indicator_[j]) return 0;
    return 2 * (i > j ? i - j : j - i);
}

Grid render(const DiffMatrixView& view, std::uint64_t cap) {
    const auto n = view.order();
    if (n > cap) throw_usage("render: order " + std::to_string(n) + " exceeds render cap " + std::to_string(cap));
    Grid grid(n, std::vector<std::uint64_t>(n));
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = 1; j <= n; ++j) grid[i - 1][j - 1] = view.entry(i, j);
    return grid;
}

std::uint64_t MasterSequence::at(std::uint64_t k) const {
    if (k < 1 || k > values.size())
        throw_range("master index " + std::to_string(k) + " outside [1, " + std::to_string(values.size()) + "]");
    return values[k - 1];
}

MasterSequence master_sequence_scan(const DiffMatrixView& view) {
    const auto n = view.order();
    MasterSequence seq{n, std::vector<std::uint64_t>(n, 0)};
    for (std::uint64_t k = 2; k <= n; ++k) {
        std::uint64_t count = 0;
        for (std::uint64_t i = 1; i + k - 1 <= n; ++i)
            if (view.entry(i, i + k - 1) > 0) ++count;
        seq.values[k - 1] = count;
    }
    return seq;
}

MasterSequence master_sequence_fast(const OddIndicator& indicator, unsigned threads) {
    const auto n = indicator.order();
    const auto& idx = indicator.prime_indices();
    MasterSequence seq{n, std::vector<std::uint64_t>(n, 0)};
    if (idx.size() < 2) return seq;
    const auto partials = map_chunks(0, idx.size(), 4 * resolve_threads(threads), threads, [&](Chunk c) {
        std::vector<std::uint64_t> acc(n, 0);
        for (std::uint64_t x = c.begin; x < c.end; ++x)
            for (std::uint64_t y = x + 1; y < idx.size(); ++y) acc[idx[y] - idx[x]] += 1;
        return acc;
    });
    for (const auto& acc : partials)
        for (std::size_t k = 0; k < n; ++k) seq.values[k] += acc[k];
    return seq;
}

void extend_master_sequence(MasterSequence& seq, const PrimalityTable& table) {
    check_extend(seq, table);
    const std::uint64_t n = seq.order + 1;
    seq.values.resize(n, 0);
    apply_step(seq.values, n, table, [](std::uint64_t) {});
    seq.order = n;
}

MasterSequence master_sequence_incremental(const MasterSequence& prev, const PrimalityTable& table) {
    MasterSequence next = prev;
    extend_master_sequence(next, table);
    return next;
}

AlmostStats almost_stats(const MasterSequence& seq) {
    const auto n = seq.order;
    if (n < 2) throw_usage("almost_stats: order must be at least 2");
    std::uint64_t alpha = 0;
    std::optional<std::uint64_t> first;
    for (std::uint64_t k = 2; k <= n; ++k) {
        if (seq.values[k - 1] > 1) continue;
        ++alpha;
        if (!first) first = k;
    }
    return make_stats(n, alpha, first);
}

std::uint64_t gap_pair_count(const PrimalityTable& table, std::uint64_t gap, std::uint64_t limit) {
    std::uint64_t count = 0;
    if (gap == 0 || gap % 2 != 0) throw_usage("gap must be a positive even number, got " + std::to_string(gap));
    if (limit > table.limit())
        throw_range("gap pairs: limit " + std::to_string(limit) + " exceeds table limit " + std::to_string(table.limit()));
    if (limit < gap + 3) return 0;
    table.for_each_prime(3, limit - gap, [&](std::uint64_t q) {
        if (table.test(q + gap)) ++count;
        return true;
    });
    return count;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> gap_pairs(const PrimalityTable& table, std::uint64_t gap,
                                                               std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (gap == 0 || gap % 2 != 0) throw_usage("gap must be a positive even number, got " + std::to_string(gap));
    if (limit > table.limit())
        throw_range("gap pairs: limit " + std::to_string(limit) + " exceeds table limit " + std::to_string(table.limit()));
    if (limit < gap + 3) return out;
    table.for_each_prime(3, limit - gap, [&](std::uint64_t q) {
        if (table.test(q + gap)) out.emplace_back(q, q + gap);
        return true;
    });
    return out;
}

void MasterSequenceBuilder::advance(const PrimalityTable& table) {
    check_extend(seq_, table);
    const std::uint64_t n = seq_.order + 1;
    seq_.values.resize(n, 0);
    apply_step(seq_.values, n, table, [&](std::uint64_t k) {
        if (seq_.values[k - 1] > 1) small_.erase(k);
    });
    seq_.order = n;
    if (n >= 2 && seq_.values[n - 1] <= 1) small_.insert(n);
}

AlmostStats MasterSequenceBuilder::stats() const {
    if (seq_.order < 2) throw_usage("almost_stats: order must be at least 2");
    std::optional<std::uint64_t> first;
    if (!small_.empty()) first = *small_.begin();
    return make_stats(seq_.order, small_.size(), first);
}

}  // namespace primemat
