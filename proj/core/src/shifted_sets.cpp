#include "primemat/shifted_sets.hpp"

#include <algorithm>
#include <string>

#include "primemat/errors.hpp"
#include "primemat/parallel.hpp"

namespace primemat {
namespace {

void check_offset(std::uint64_t a) {
    if (a == 0 || a % 2 == 0) throw_usage("shift offset must be an odd natural number, got " + std::to_string(a));
}

void check_bound(const PrimalityTable& table, std::uint64_t a, std::uint64_t limit) {
    if (a > table.limit() || limit > (table.limit() - a) / 2)
        throw_range("2k + " + std::to_string(a) + " for k <= " + std::to_string(limit) + " exceeds table limit " +
                    std::to_string(table.limit()));
}

// Calls fn(k) for each k in [lo, hi] with 2k + a and 2k + b prime.
template <typename Fn>
void scan_pairs(const PrimalityTable& table, std::uint64_t a, std::uint64_t b, std::uint64_t lo, std::uint64_t hi,
                Fn&& fn) {
    if (lo > hi) return;
    table.for_each_prime(2 * lo + a, 2 * hi + a, [&](std::uint64_t p) {
        if ((p - a) % 2 != 0) return true;  // only 2 can be even here
        const std::uint64_t k = (p - a) / 2;
        if (!table.test(2 * k + b)) return true;
        return fn(k);
    });
}

}  // namespace

bool ShiftedPrimeSet::contains(std::uint64_t k) const {
    return std::binary_search(members.begin(), members.end(), k);
}

ShiftedPrimeSet members(const PrimalityTable& table, std::uint64_t a, std::uint64_t limit) {
    check_offset(a);
    check_bound(table, a, limit);
    ShiftedPrimeSet set{a, limit, {}};
    if (limit == 0) return set;
    table.for_each_prime(2 + a, 2 * limit + a, [&](std::uint64_t p) {
        if ((p - a) % 2 == 0) set.members.push_back((p - a) / 2);
        return true;
    });
    return set;
}

ClaimReport check_shift_lemma(const ShiftedPrimeSet& lower, const ShiftedPrimeSet& upper) {
    Stopwatch clock;
    if (upper.a != lower.a + 2) throw_usage("check_shift_lemma: expected S_a and S_{a+2}");
    const std::uint64_t limit = std::min(lower.limit, upper.limit + 1);
    ClaimReport report;
    report.claim = "shift-lemma";
    report.range_lo = 1;
    report.range_hi = limit == 0 ? 0 : limit - 1;
    report.details.emplace_back("a", lower.a);

    // Forward: k in S_{a+2}, k <= limit - 1  =>  k + 1 in S_a.
    for (std::uint64_t k : upper.members) {
        if (k + 1 > limit) break;
        if (!lower.contains(k + 1)) {
            report.status = ClaimStatus::counterexample;
            report.counterexample = {lower.a, k, 0};
            break;
        }
    }
    // Backward: k in S_a, 2 <= k <= limit  =>  k - 1 in S_{a+2}.
    if (report.ok()) {
        for (std::uint64_t k : lower.members) {
            if (k > limit) break;
            if (k < 2) continue;
            if (!upper.contains(k - 1)) {
                report.status = ClaimStatus::counterexample;
                report.counterexample = {lower.a, k, 1};
                break;
            }
        }
    }
    if (report.status == ClaimStatus::counterexample)
        report.details.emplace_back("counterexample_layout", std::string("[a, k, direction(0=forward,1=backward)]"));
    report.details.emplace_back("checked_members", static_cast<std::uint64_t>(upper.members.size() + lower.members.size()));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

ClaimReport check_shift_lemma(const PrimalityTable& table, std::uint64_t a, std::uint64_t limit) {
    Stopwatch clock;
    auto lower = members(table, a, limit);
    auto upper = members(table, a + 2, limit == 0 ? 0 : limit - 1);
    auto report = check_shift_lemma(lower, upper);
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

std::vector<std::uint64_t> intersect(const PrimalityTable& table, std::uint64_t a, std::uint64_t b,
                                     std::uint64_t limit) {
    check_offset(a);
    check_offset(b);
    check_bound(table, std::max(a, b), limit);
    std::vector<std::uint64_t> out;
    scan_pairs(table, a, b, 1, limit, [&](std::uint64_t k) {
        out.push_back(k);
        return true;
    });
    return out;
}

std::optional<std::uint64_t> first_witness_above(const PrimalityTable& table, std::uint64_t a, std::uint64_t b,
                                                 std::uint64_t threshold, std::uint64_t limit) {
    check_offset(a);
    check_offset(b);
    check_bound(table, std::max(a, b), limit);
    std::optional<std::uint64_t> found;
    scan_pairs(table, a, b, std::max<std::uint64_t>(threshold + 1, 1), limit, [&](std::uint64_t k) {
        found = k;
        return false;
    });
    return found;
}

std::vector<std::uint64_t> base_three_witnesses(const PrimalityTable& table, std::uint64_t m, std::uint64_t limit) {
    if (m == 0) throw_usage("base_three_witnesses: m must be at least 1");
    return intersect(table, 3, 2 * m + 3, limit);
}

std::vector<WitnessCount> base_three_witness_counts(const PrimalityTable& table, std::uint64_t m_max,
                                                    std::uint64_t limit, unsigned threads) {
    if (m_max == 0) return {};
    check_bound(table, 2 * m_max + 3, limit);
    const auto primes = table.primes(5, 2 * limit + 3);
    const auto chunks = map_chunks(1, m_max + 1, 16 * resolve_threads(threads), threads, [&](Chunk c) {
        std::vector<WitnessCount> out;
        for (std::uint64_t m = c.begin; m < c.end; ++m) {
            WitnessCount wc{m, 0, std::nullopt};
            for (std::uint64_t p : primes) {
                if (!table.test(p + 2 * m)) continue;
                if (!wc.first) wc.first = (p - 3) / 2;
                ++wc.count;
            }
            out.push_back(wc);
        }
        return out;
    });
    std::vector<WitnessCount> out;
    out.reserve(m_max);
    for (const auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::optional<std::uint64_t> lift_pair(const PrimalityTable& table, std::uint64_t p, std::uint64_t q,
                                       std::uint64_t max_k) {
    for (std::uint64_t x : {p, q}) {
        if (x > table.limit()) throw_range("lift_pair: " + std::to_string(x) + " exceeds table limit");
        if (x % 2 == 0 || !table.test(x)) throw_usage("lift_pair: " + std::to_string(x) + " is not an odd prime");
    }
    const std::uint64_t hi = std::max(p, q);
    const std::uint64_t lo = std::min(p, q);
    if (hi + 2 > table.limit()) return std::nullopt;
    const std::uint64_t table_k = (table.limit() - hi) / 2;
    const std::uint64_t bound = std::min(max_k, table_k);
    std::optional<std::uint64_t> found;
    // Walk primes above `lo` and test the partner shifted by the same amount.
    table.for_each_prime(lo + 2, lo + 2 * bound, [&](std::uint64_t x) {
        const std::uint64_t k = (x - lo) / 2;
        if (table.test(hi + 2 * k)) {
            found = k;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace primemat
