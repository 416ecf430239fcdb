#include <gtest/gtest.h>

#include <numeric>

#include "golden/published_tables.hpp"
#include "oracles.hpp"
#include "primemat/diff_matrix.hpp"
#include "primemat/errors.hpp"
#include "primemat/grid.hpp"
#include "support.hpp"

using namespace primemat;

namespace {

const PrimalityTable& small() { return fixtures::table(10000); }

std::vector<std::uint64_t> tail(const MasterSequence& seq) {
    return {seq.values.begin() + 1, seq.values.end()};
}

}  // namespace

TEST(DiffMatrix, Entries) {
    const DiffMatrixView a(small(), 15);
    EXPECT_EQ(a.entry(1, 1), 0u);
    EXPECT_EQ(a.entry(1, 15), 28u);
    EXPECT_EQ(a.entry(15, 3), 24u);
    EXPECT_EQ(a.entry(3, 15), 24u);
    EXPECT_EQ(a.entry(4, 9), 0u);
    EXPECT_THROW((void)a.entry(16, 1), RangeError);
}

TEST(DiffMatrix, RenderMatchesPublishedExceptErratum) {
    const auto got = render(DiffMatrixView(small(), 15));
    const auto printed = golden::as_rendered(golden::kDiffA15Printed);

    Grid expect;
    std::istringstream in(printed);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        expect.emplace_back(std::istream_iterator<std::uint64_t>(row), std::istream_iterator<std::uint64_t>());
    }
    ASSERT_EQ(expect.size(), 15u);
    std::vector<std::pair<int, int>> mismatches;
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j)
            if (got[i][j] != expect[i][j]) mismatches.emplace_back(i + 1, j + 1);
    EXPECT_EQ(mismatches, (std::vector<std::pair<int, int>>{{15, 3}}));
    EXPECT_EQ(expect[14][2], 26u);
    EXPECT_EQ(got[14][2], 24u);
    EXPECT_EQ(expect[2][14], 24u);
}

TEST(DiffMatrix, GoldenSequences) {
    EXPECT_EQ(master_sequence_fast(odd_indicator(small(), 15)).values, golden::kDiffSequence15);
    EXPECT_EQ(tail(master_sequence_fast(odd_indicator(small(), 13))), golden::kDiffTail13);
}

TEST(DiffMatrix, GapTwelveWitnesses) {
    const auto seq = master_sequence_fast(odd_indicator(small(), 15));
    EXPECT_EQ(seq.at(7), 5u);
    EXPECT_EQ(MasterSequence::gap_for(7), 12u);
    EXPECT_EQ(gap_pairs(small(), 12, 31), golden::kGap12);
}

TEST(DiffMatrix, AlmostStats) {
    const auto s13 = almost_stats(master_sequence_fast(odd_indicator(small(), 13)));
    EXPECT_EQ(s13.alpha, 4u);
    EXPECT_EQ(s13.t, 9u);
    EXPECT_DOUBLE_EQ(s13.mu, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(*s13.nu, 0.75);

    const auto s15 = almost_stats(master_sequence_fast(odd_indicator(small(), 15)));
    EXPECT_EQ(s15.alpha, 2u);
    EXPECT_EQ(s15.t, 11u);

    EXPECT_THROW(almost_stats(master_sequence_fast(odd_indicator(small(), 1))), UsageError);
}

TEST(DiffMatrix, MatchesOracle) {
    for (std::uint64_t n = 1; n <= 300; ++n)
        ASSERT_EQ(master_sequence_fast(odd_indicator(small(), n)).values, oracle::diff_sequence(n)) << n;
}

TEST(DiffMatrix, ScanFastIncrementalAgree) {
    MasterSequence chained;
    for (std::uint64_t n = 1; n <= 400; ++n) {
        const auto chi = odd_indicator(small(), n);
        chained = n == 1 ? master_sequence_fast(chi) : master_sequence_incremental(chained, small());
        const auto fast = master_sequence_fast(chi);
        ASSERT_EQ(chained, fast) << n;
        ASSERT_EQ(fast.at(1), 0u);
        if (n % 7 == 0 || n < 30) ASSERT_EQ(master_sequence_scan(DiffMatrixView(chi)), fast) << n;
    }
    const auto chi = odd_indicator(small(), 2000);
    EXPECT_EQ(master_sequence_fast(chi, 1), master_sequence_fast(chi, 4));
}

TEST(DiffMatrix, Conservation) {
    for (std::uint64_t n = 1; n <= 500; n += 17) {
        const auto chi = odd_indicator(small(), n);
        const auto seq = master_sequence_fast(chi);
        const auto total = std::accumulate(seq.values.begin(), seq.values.end(), std::uint64_t{0});
        const auto p = chi.prime_count();
        ASSERT_EQ(total, p * (p - 1) / 2);
    }
}

TEST(DiffMatrix, SequenceIsGapCensus) {
    for (std::uint64_t n : {15ull, 97ull, 500ull}) {
        const auto seq = master_sequence_fast(odd_indicator(small(), n));
        for (std::uint64_t k = 2; k <= n; ++k)
            ASSERT_EQ(seq.at(k), gap_pair_count(small(), MasterSequence::gap_for(k), 2 * n + 1));
    }
}

TEST(DiffMatrix, Recurrence) {
    for (std::uint64_t n = 2; n <= 300; ++n) {
        const auto prev = master_sequence_fast(odd_indicator(small(), n - 1));
        const auto next = master_sequence_fast(odd_indicator(small(), n));
        const bool prime = oracle::trial_prime(2 * n + 1);
        for (std::uint64_t k = 2; k <= n - 1; ++k) {
            if (prime)
                ASSERT_GE(next.at(k), prev.at(k));
            else
                ASSERT_EQ(next.at(k), prev.at(k));
            ASSERT_LE(next.at(k) - prev.at(k), 1u);
        }
        ASSERT_EQ(next.at(n), prime ? 1u : 0u);
    }
}

TEST(DiffMatrix, GapPairCount) {
    EXPECT_EQ(gap_pair_count(small(), 2, 31), 5u);
    EXPECT_EQ(gap_pair_count(small(), 12, 31), 5u);
    EXPECT_EQ(gap_pair_count(small(), 2, 100), 8u);
    EXPECT_EQ(gap_pair_count(small(), 2, 10000), oracle::twin_pairs(10000).size());
    EXPECT_THROW(gap_pair_count(small(), 3, 100), UsageError);
    EXPECT_THROW(gap_pair_count(small(), 0, 100), UsageError);
    EXPECT_THROW(gap_pair_count(small(), 2, 10001), RangeError);
}

TEST(DiffMatrix, BuilderTracksStats) {
    MasterSequenceBuilder builder;
    builder.advance(small());
    for (std::uint64_t n = 2; n <= 600; ++n) {
        builder.advance(small());
        const auto fresh = master_sequence_fast(odd_indicator(small(), n));
        ASSERT_EQ(builder.sequence(), fresh);
        ASSERT_EQ(builder.stats(), almost_stats(fresh)) << n;
    }
}
