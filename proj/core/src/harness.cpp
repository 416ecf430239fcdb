#include "primemat/harness.hpp"

#include <algorithm>
#include <string>

#include "primemat/diff_matrix.hpp"
#include "primemat/errors.hpp"
#include "primemat/parallel.hpp"
#include "primemat/sum_matrix.hpp"

namespace primemat {
namespace {

// Chunk layout is fixed so that merged results never depend on thread count.
constexpr std::uint64_t kChunks = 64;

struct ChunkOutcome {
    std::optional<std::vector<std::uint64_t>> failure;
    std::vector<std::vector<std::uint64_t>> witnesses;
    std::uint64_t checked = 0;
    // claim-specific extremum, merged with a smallest-key tie-break
    std::uint64_t extreme_value = 0;
    std::uint64_t extreme_key = 0;
    std::uint64_t tally = 0;  // claim-specific counter, summed across chunks
    bool flag = false;
};

struct Merged {
    std::optional<std::vector<std::uint64_t>> failure;
    std::vector<std::vector<std::uint64_t>> witnesses;
    std::uint64_t checked = 0;
    std::uint64_t extreme_value = 0;
    std::uint64_t extreme_key = 0;
    std::uint64_t tally = 0;
    bool flag = false;
};

Merged merge(const std::vector<ChunkOutcome>& chunks, std::size_t witness_cap) {
    Merged m;
    for (const auto& c : chunks) {
        m.checked += c.checked;
        m.tally += c.tally;
        m.flag = m.flag || c.flag;
        if (c.extreme_value > m.extreme_value) {
            m.extreme_value = c.extreme_value;
            m.extreme_key = c.extreme_key;
        }
        for (const auto& w : c.witnesses) {
            if (m.witnesses.size() >= witness_cap) break;
            m.witnesses.push_back(w);
        }
        if (c.failure) {
            m.failure = c.failure;
            m.witnesses.clear();
            break;  // chunks are in range order; later chunks are irrelevant
        }
    }
    return m;
}

void finish(ClaimReport& report, Merged&& merged) {
    if (merged.failure) {
        report.status = ClaimStatus::counterexample;
        report.counterexample = std::move(*merged.failure);
    } else {
        report.status = ClaimStatus::verified;
    }
    report.witnesses = std::move(merged.witnesses);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> smallest_split(const PrimalityTable& table, std::uint64_t even) {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> out;
    table.for_each_prime(3, even / 2, [&](std::uint64_t p) {
        if (!table.test(even - p)) return true;
        out.emplace(p, even - p);
        return false;
    });
    return out;
}

}  // namespace

std::optional<std::pair<std::uint64_t, std::uint64_t>> goldbach_witness(const PrimalityTable& table,
                                                                        std::uint64_t even) {
    if (even < 6 || even % 2 != 0) throw_usage("goldbach: expected an even number >= 6, got " + std::to_string(even));
    if (even - 3 > table.limit())
        throw_range("goldbach: " + std::to_string(even) + " - 3 exceeds table limit " + std::to_string(table.limit()));
    return smallest_split(table, even);
}

ClaimReport verify_goldbach(const PrimalityTable& table, std::uint64_t max_even, const SuiteOptions& options) {
    Stopwatch clock;
    if (max_even < 6 || max_even % 2 != 0)
        throw_usage("verify_goldbach: max_even must be even and >= 6, got " + std::to_string(max_even));
    if (max_even > table.limit())
        throw_range("verify_goldbach: max_even " + std::to_string(max_even) + " exceeds table limit " +
                    std::to_string(table.limit()));

    // Evens are indexed by half: E = 2h.
    const auto chunks = map_chunks(3, max_even / 2 + 1, kChunks, options.threads, [&](Chunk c) {
        ChunkOutcome out;
        for (std::uint64_t h = c.begin; h < c.end; ++h) {
            const std::uint64_t even = 2 * h;
            const auto split = smallest_split(table, even);
            ++out.checked;
            if (!split) {
                out.failure = std::vector<std::uint64_t>{even};
                break;
            }
            if (out.witnesses.size() < options.witness_cap) out.witnesses.push_back({even, split->first, split->second});
            if (split->first > out.extreme_value) {
                out.extreme_value = split->first;
                out.extreme_key = even;
            }
        }
        return out;
    });

    ClaimReport report;
    report.claim = "goldbach";
    report.range_lo = 6;
    report.range_hi = max_even;
    auto merged = merge(chunks, options.witness_cap);
    report.details.emplace_back("evens_checked", merged.checked);
    report.details.emplace_back("largest_smallest_p", merged.extreme_value);
    report.details.emplace_back("largest_smallest_p_even", merged.extreme_key);
    finish(report, std::move(merged));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

ClaimReport verify_diff_pairs(const PrimalityTable& table, std::uint64_t m_max, const SuiteOptions& options) {
    Stopwatch clock;
    if (m_max < 1) throw_usage("verify_diff_pairs: m_max must be at least 1");
    if (m_max > (table.limit() - 1) / 8)
        throw_range("verify_diff_pairs: 8 m_max + 1 = " + std::to_string(8 * m_max + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));

    const auto chunks = map_chunks(1, m_max + 1, kChunks, options.threads, [&](Chunk c) {
        ChunkOutcome out;
        for (std::uint64_t m = c.begin; m < c.end; ++m) {
            const std::uint64_t gap = 2 * m;
            // The order-4m difference matrix covers the odd numbers 3..8m+1.
            const std::uint64_t top = 8 * m + 1;
            std::vector<std::uint64_t> smaller;
            table.for_each_prime(3, top - gap, [&](std::uint64_t q) {
                if (table.test(q + gap)) smaller.push_back(q);
                return smaller.size() < 2;
            });
            ++out.checked;
            if (smaller.size() < 2) {
                out.failure = std::vector<std::uint64_t>{m, smaller.size()};
                break;
            }
            if (out.witnesses.size() < options.witness_cap)
                out.witnesses.push_back({m, smaller[0] + gap, smaller[0], smaller[1] + gap, smaller[1]});
        }
        return out;
    });

    ClaimReport report;
    report.claim = "diff-pairs";
    report.range_lo = 1;
    report.range_hi = m_max;
    auto merged = merge(chunks, options.witness_cap);
    report.details.emplace_back("gaps_checked", merged.checked);
    finish(report, std::move(merged));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

PairCensus polignac_census(const PrimalityTable& table, std::uint64_t gap, std::uint64_t limit, bool collect_pairs) {
    PairCensus census{gap, limit, 0, {}};
    if (collect_pairs) {
        census.pairs = gap_pairs(table, gap, limit);
        census.count = census.pairs.size();
    } else {
        census.count = gap_pair_count(table, gap, limit);
    }
    return census;
}

ClaimReport verify_twin_between(const PrimalityTable& table, std::uint64_t p_max, const SuiteOptions& options) {
    Stopwatch clock;
    if (p_max > table.limit() / 2)
        throw_range("verify_twin_between: 2 p_max = " + std::to_string(2 * p_max) + " exceeds table limit " +
                    std::to_string(table.limit()));

    std::vector<std::uint64_t> twins;  // lower members q with q + 2 <= 2 p_max
    if (p_max >= 3) {
        table.for_each_prime(3, 2 * p_max - 2, [&](std::uint64_t q) {
            if (table.test(q + 2)) twins.push_back(q);
            return true;
        });
    }
    const auto primes = p_max >= 11 ? table.primes(11, p_max) : std::vector<std::uint64_t>{};

    const auto chunks = map_chunks(0, primes.size(), kChunks, options.threads, [&](Chunk c) {
        ChunkOutcome out;
        for (std::uint64_t x = c.begin; x < c.end; ++x) {
            const std::uint64_t p = primes[x];
            ++out.checked;
            const auto it = std::upper_bound(twins.begin(), twins.end(), p);
            if (it == twins.end() || *it + 2 > 2 * p) {
                out.failure = std::vector<std::uint64_t>{p};
                break;
            }
            // A strict upper bound q + 2 < 2p would reject this twin.
            if (*it + 2 == 2 * p) out.flag = true;
            if (out.witnesses.size() < options.witness_cap) out.witnesses.push_back({p, *it, *it + 2});
        }
        return out;
    });

    ClaimReport report;
    report.claim = "twin-between";
    report.range_lo = 11;
    report.range_hi = p_max;
    auto merged = merge(chunks, options.witness_cap);
    report.details.emplace_back("primes_checked", merged.checked);
    report.details.emplace_back("strict_upper_changes_outcome", merged.flag);
    finish(report, std::move(merged));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

std::string_view to_string(Family family) { return family == Family::sum ? "sum" : "diff"; }

std::optional<Family> parse_family(std::string_view text) {
    if (text == "sum") return Family::sum;
    if (text == "diff") return Family::diff;
    return std::nullopt;
}

StatSeries mu_nu_series(const PrimalityTable& table, Family family, std::uint64_t n_max, std::uint64_t step) {
    if (step < 1) throw_usage("mu_nu_series: step must be at least 1");
    if (table.limit() < 3 || n_max > (table.limit() - 1) / 2)
        throw_range("mu_nu_series: 2 n_max + 1 = " + std::to_string(2 * n_max + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));
    StatSeries series{family, {}};
    if (family == Family::sum) {
        CharSequenceBuilder builder;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            builder.advance(table);
            if (n % step != 0) continue;
            const auto s = builder.stats();
            series.rows.push_back({n, s.m0, s.k0, s.zero_ratio, s.position_ratio});
        }
    } else {
        MasterSequenceBuilder builder;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            builder.advance(table);
            if (n % step != 0 || n < 2) continue;
            const auto s = builder.stats();
            series.rows.push_back({n, s.alpha, s.t, s.mu, s.nu});
        }
    }
    return series;
}

std::string to_csv(const StatSeries& series) {
    std::string out = series.family == Family::sum ? "n,m0,k0,mu,nu\n" : "n,alpha,t,mu,nu\n";
    for (const auto& row : series.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.count);
        out += ',';
        if (row.position) out += std::to_string(*row.position);
        out += ',';
        out += format_ratio(row.mu);
        out += ',';
        if (row.nu) out += format_ratio(*row.nu);
        out += '\n';
    }
    return out;
}

namespace {

// Checks one sum-family step prev (order n-1) -> next (order n).
// Returns the first offending position, or 0 when the step is legal.
std::uint64_t sum_step_violation(const std::vector<std::uint64_t>& prev, const std::vector<std::uint64_t>& next,
                                  std::uint64_t n, bool new_prime) {
    for (std::uint64_t j = 1; j + 1 <= n; ++j)
        if (next[j - 1] != prev[j - 1]) return j;
    for (std::uint64_t j = n; j + 3 <= 2 * n; ++j) {
        if (next[j - 1] < prev[j - 1]) return j;
        const std::uint64_t delta = next[j - 1] - prev[j - 1];
        if (delta != 0 && (delta != 2 || !new_prime)) return j;
    }
    if (n >= 2) {
        const std::uint64_t v = next[2 * n - 3];
        if ((v != 0 && v != 2) || (v != 0 && !new_prime)) return 2 * n - 2;
    }
    const std::uint64_t last = next[2 * n - 2];
    if (last > 1 || (last != 0) != new_prime) return 2 * n - 1;
    return 0;
}

std::uint64_t diff_step_violation(const std::vector<std::uint64_t>& prev, const std::vector<std::uint64_t>& next,
                                  std::uint64_t n, bool new_prime) {
    if (next[0] != 0) return 1;
    for (std::uint64_t k = 2; k + 1 <= n; ++k) {
        if (next[k - 1] < prev[k - 1]) return k;
        const std::uint64_t delta = next[k - 1] - prev[k - 1];
        if (delta > 1 || (delta != 0 && !new_prime)) return k;
    }
    if (n >= 2) {
        const std::uint64_t v = next[n - 1];
        if (v > 1 || (v != 0) != new_prime) return n;
    }
    return 0;
}

struct CornerCounts {
    std::uint64_t count = 0;
    std::optional<std::uint64_t> first;
};

CornerCounts corner_counts(Family family, const std::vector<std::uint64_t>& values, std::uint64_t n) {
    if (family == Family::sum) {
        const auto z = zero_stats(CharSequence{n, values});
        return {z.m0, z.k0};
    }
    if (n < 2) return {};
    const auto a = almost_stats(MasterSequence{n, values});
    return {a.alpha, a.t};
}

}  // namespace

ClaimReport recurrence_consistency(const PrimalityTable& table, Family family, std::uint64_t n_max,
                                   const SuiteOptions& options) {
    Stopwatch clock;
    if (n_max < 2) throw_usage("recurrence_consistency: n_max must be at least 2");
    if (n_max > (table.limit() - 1) / 2)
        throw_range("recurrence_consistency: 2 n_max + 1 = " + std::to_string(2 * n_max + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));

    auto fresh = [&](std::uint64_t n) -> std::vector<std::uint64_t> {
        if (n == 0) return {};
        const auto chi = odd_indicator(table, n);
        return family == Family::sum ? char_sequence_fast(chi).values : master_sequence_fast(chi).values;
    };
    // Count growth allowed per step: two new anti-diagonals vs one new superdiagonal.
    const std::uint64_t count_slack = family == Family::sum ? 2 : 1;

    // Each chunk seeds from a fresh sequence at begin - 1 and chains from there.
    const auto chunks = map_chunks(1, n_max + 1, kChunks, options.threads, [&](Chunk c) {
        ChunkOutcome out;
        std::vector<std::uint64_t> prev = fresh(c.begin - 1);
        CharSequence sum_seq{c.begin - 1, prev};
        MasterSequence diff_seq{c.begin - 1, prev};
        auto prev_corner = corner_counts(family, prev, c.begin - 1);
        for (std::uint64_t n = c.begin; n < c.end; ++n) {
            const bool new_prime = table.test(2 * n + 1);
            const std::vector<std::uint64_t>* next = nullptr;
            if (family == Family::sum) {
                extend_char_sequence(sum_seq, table);
                next = &sum_seq.values;
            } else {
                extend_master_sequence(diff_seq, table);
                next = &diff_seq.values;
            }
            ++out.checked;
            if (!new_prime) ++out.tally;

            const auto expected = fresh(n);
            if (expected != *next) {
                std::uint64_t pos = 1;
                while (pos <= expected.size() && expected[pos - 1] == (*next)[pos - 1]) ++pos;
                out.failure = std::vector<std::uint64_t>{n, pos, 0};
                break;
            }
            const std::uint64_t bad = family == Family::sum ? sum_step_violation(prev, *next, n, new_prime)
                                                            : diff_step_violation(prev, *next, n, new_prime);
            if (bad != 0) {
                out.failure = std::vector<std::uint64_t>{n, bad, 1};
                break;
            }
            const auto corner = corner_counts(family, *next, n);
            const bool count_ok = corner.count <= prev_corner.count + count_slack;
            const bool first_ok = !prev_corner.first || !corner.first || *corner.first >= *prev_corner.first;
            if (!count_ok || !first_ok) {
                out.failure = std::vector<std::uint64_t>{n, corner.first.value_or(0), 2};
                break;
            }
            prev = *next;
            prev_corner = corner;
        }
        return out;
    });

    ClaimReport report;
    report.claim = family == Family::sum ? "recurrence-sum" : "recurrence-diff";
    report.range_lo = 1;
    report.range_hi = n_max;
    auto merged = merge(chunks, 0);
    report.details.emplace_back("steps_checked", merged.checked);
    report.details.emplace_back("composite_steps", merged.tally);
    finish(report, std::move(merged));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

SuiteBounds suite_bounds(std::uint64_t limit) {
    if (limit < kMinSuiteLimit)
        throw_usage("verify: limit must be at least " + std::to_string(kMinSuiteLimit) + ", got " + std::to_string(limit));
    SuiteBounds b;
    b.max_even = limit & ~std::uint64_t{1};
    b.m_max = (limit - 1) / 8;
    b.p_max = limit / 2;
    b.recurrence_n_max = std::min(kRecurrenceCap, (limit - 1) / 2);
    return b;
}

std::vector<ClaimReport> verify_all(const PrimalityTable& table, std::uint64_t limit, const SuiteOptions& options) {
    const auto b = suite_bounds(limit);
    std::vector<ClaimReport> out;
    out.push_back(verify_goldbach(table, b.max_even, options));
    out.push_back(verify_diff_pairs(table, b.m_max, options));
    out.push_back(verify_twin_between(table, b.p_max, options));
    out.push_back(recurrence_consistency(table, Family::sum, b.recurrence_n_max, options));
    out.push_back(recurrence_consistency(table, Family::diff, b.recurrence_n_max, options));
    return out;
}

}  // namespace primemat
