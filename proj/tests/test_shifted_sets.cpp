#include <gtest/gtest.h>

#include "golden/published_tables.hpp"
#include "oracles.hpp"
#include "primemat/errors.hpp"
#include "primemat/shifted_sets.hpp"
#include "support.hpp"

using namespace primemat;

namespace {

const PrimalityTable& mid() { return fixtures::table(1'000'000); }

std::vector<std::uint64_t> prefix(const ShiftedPrimeSet& s, std::size_t len) {
    return {s.members.begin(), s.members.begin() + static_cast<std::ptrdiff_t>(len)};
}

bool includes(const std::vector<std::uint64_t>& hay, const std::vector<std::uint64_t>& needles) {
    return std::includes(hay.begin(), hay.end(), needles.begin(), needles.end());
}

}  // namespace

TEST(ShiftedSets, PublishedPrefixes) {
    EXPECT_EQ(prefix(members(mid(), 3, 100), golden::kS3Prefix.size()), golden::kS3Prefix);
    EXPECT_EQ(prefix(members(mid(), 5, 100), golden::kS5Prefix.size()), golden::kS5Prefix);
    EXPECT_EQ(prefix(members(mid(), 7, 100), golden::kS7Prefix.size()), golden::kS7Prefix);
}

TEST(ShiftedSets, MembershipMatchesOracle) {
    for (std::uint64_t a : {1ull, 3ull, 9ull, 101ull}) {
        const auto s = members(mid(), a, 5000);
        std::vector<std::uint64_t> expect;
        for (std::uint64_t k = 1; k <= 5000; ++k)
            if (oracle::trial_prime(2 * k + a)) expect.push_back(k);
        EXPECT_EQ(s.members, expect) << a;
        EXPECT_EQ(s.contains(expect.front()), true);
    }
}

TEST(ShiftedSets, PublishedIntersections) {
    EXPECT_TRUE(includes(intersect(mid(), 3, 5, 100), {1, 4, 7, 13, 19}));
    EXPECT_TRUE(includes(intersect(mid(), 3, 7, 100), {2, 5, 8, 17}));
    EXPECT_TRUE(includes(intersect(mid(), 5, 13, 100), {9}));
}

TEST(ShiftedSets, IntersectionSymmetric) {
    for (std::uint64_t a = 1; a <= 31; a += 2)
        for (std::uint64_t b = a; b <= 31; b += 2) ASSERT_EQ(intersect(mid(), a, b, 2000), intersect(mid(), b, a, 2000));
}

TEST(ShiftedSets, LargeMemberships) {
    const auto& big = fixtures::table(16'000'000);
    EXPECT_TRUE(members(big, 3, 700'000).contains(649907));
    EXPECT_TRUE(members(big, 7, 700'000).contains(649907));
    const auto s35 = intersect(big, 3, 5, 7'800'000);
    EXPECT_TRUE(std::binary_search(s35.begin(), s35.end(), 7743127));
    EXPECT_EQ(first_witness_above(big, 3, 7, 600'000, 700'000), 600092u);
    EXPECT_EQ(first_witness_above(big, 3, 5, 7'000'000, 7'800'000), 7000042u);
}

TEST(ShiftedSets, ShiftLemma) {
    for (std::uint64_t a = 1; a <= 51; a += 2) EXPECT_TRUE(check_shift_lemma(mid(), a, 10000).ok()) << a;

    auto lower = members(mid(), 3, 100);
    auto upper = members(mid(), 5, 100);
    EXPECT_TRUE(check_shift_lemma(lower, upper).ok());
    // drop 2 from S_3: then 1 in S_5 has no partner 2 in S_3
    lower.members.erase(std::find(lower.members.begin(), lower.members.end(), 2));
    const auto broken = check_shift_lemma(lower, upper);
    EXPECT_EQ(broken.status, ClaimStatus::counterexample);
    ASSERT_GE(broken.counterexample.size(), 2u);
    EXPECT_EQ(broken.counterexample[0], 3u);
}

TEST(ShiftedSets, ShiftBijection) {
    // k in S_{a+2} iff k + 1 in S_a
    for (std::uint64_t a : {3ull, 5ull, 11ull}) {
        const auto s = members(mid(), a, 3001);
        const auto t = members(mid(), a + 2, 3000);
        std::vector<std::uint64_t> shifted;
        for (auto k : t.members) shifted.push_back(k + 1);
        std::vector<std::uint64_t> tail_of_s;
        for (auto k : s.members)
            if (k >= 2) tail_of_s.push_back(k);
        EXPECT_EQ(shifted, tail_of_s);
    }
}

TEST(ShiftedSets, LargeWitnessesForSmallOffsets) {
    for (std::uint64_t a = 1; a <= 1999; a += 2) {
        ASSERT_TRUE(first_witness_above(mid(), a, a + 4, kLargeWitnessThreshold, 100000)) << a;
        ASSERT_TRUE(first_witness_above(mid(), a, a + 2, kLargeWitnessThreshold, 100000)) << a;
    }
}

TEST(ShiftedSets, BaseThreeWitnesses) {
    EXPECT_EQ(base_three_witnesses(mid(), 1, 20), (std::vector<std::uint64_t>{1, 4, 7, 13, 19}));
    const auto counts = base_three_witness_counts(mid(), 2000, 100000, 2);
    ASSERT_EQ(counts.size(), 2000u);
    for (std::uint64_t m = 1; m <= 2000; ++m) {
        ASSERT_EQ(counts[m - 1].m, m);
        ASSERT_GT(counts[m - 1].count, 0u) << m;
    }
    EXPECT_EQ(counts[0].first, 1u);
    EXPECT_EQ(counts, base_three_witness_counts(mid(), 2000, 100000, 1));
}

TEST(ShiftedSets, LiftPair) {
    EXPECT_EQ(lift_pair(mid(), 3, 5, 100), 1u);   // 5, 7
    EXPECT_EQ(lift_pair(mid(), 3, 7, 100), 2u);   // 7, 11
    EXPECT_EQ(lift_pair(mid(), 5, 13, 100), 3u);  // 11, 19
    EXPECT_THROW(lift_pair(mid(), 9, 11, 100), UsageError);
    EXPECT_THROW(lift_pair(mid(), 2, 5, 100), UsageError);
}

TEST(ShiftedSets, Errors) {
    EXPECT_THROW(members(mid(), 4, 10), UsageError);
    EXPECT_THROW(members(mid(), 3, 600'000), RangeError);
}
