#include <gtest/gtest.h>

#include "primemat/errors.hpp"
#include "primemat/harness.hpp"
#include "support.hpp"

using namespace primemat;

namespace {

const PrimalityTable& mid() { return fixtures::table(1'000'000); }

std::uint64_t detail_u64(const ClaimReport& r, std::string_view key) {
    const auto* v = r.detail(key);
    if (v == nullptr) throw std::runtime_error("missing detail");
    return std::get<std::uint64_t>(*v);
}

}  // namespace

TEST(Goldbach, Witnesses) {
    EXPECT_EQ(goldbach_witness(mid(), 6), (std::pair<std::uint64_t, std::uint64_t>{3, 3}));
    EXPECT_EQ(goldbach_witness(mid(), 36), (std::pair<std::uint64_t, std::uint64_t>{5, 31}));
    EXPECT_EQ(goldbach_witness(mid(), 128), (std::pair<std::uint64_t, std::uint64_t>{19, 109}));
}

TEST(Goldbach, VerifiesRange) {
    const auto r = verify_goldbach(mid(), 100000);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.range_lo, 6u);
    EXPECT_EQ(r.range_hi, 100000u);
    EXPECT_EQ(detail_u64(r, "evens_checked"), (100000u - 6) / 2 + 1);
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses.front(), (std::vector<std::uint64_t>{6, 3, 3}));
}

TEST(Goldbach, CorruptTableGivesCounterexample) {
    auto bytes = build_table(1000).packed_bytes();
    bytes[0] &= static_cast<std::uint8_t>(~(1u << 5));  // 5 no longer prime
    const auto broken = PrimalityTable::from_packed_bytes(1000, bytes);
    const auto r = verify_goldbach(broken, 1000);
    EXPECT_EQ(r.status, ClaimStatus::counterexample);
    EXPECT_EQ(r.counterexample, (std::vector<std::uint64_t>{8}));
    EXPECT_TRUE(r.witnesses.empty());
}

TEST(DiffPairs, SmallGaps) {
    const auto r = verify_diff_pairs(mid(), 6);
    ASSERT_TRUE(r.ok());
    for (const auto& row : r.witnesses) {
        ASSERT_EQ(row.size(), 5u);
        const auto m = row[0];
        EXPECT_EQ(row[1] - row[2], 2 * m);
        EXPECT_EQ(row[3] - row[4], 2 * m);
        EXPECT_NE(row[1], row[3]);
        EXPECT_LE(std::max(row[1], row[3]), 8 * m + 1);
        EXPECT_TRUE(mid().is_prime(row[1]) && mid().is_prime(row[2]));
        EXPECT_TRUE(mid().is_prime(row[3]) && mid().is_prime(row[4]));
    }
    EXPECT_TRUE(verify_diff_pairs(mid(), 1).ok());
    EXPECT_TRUE(verify_diff_pairs(mid(), 10000).ok());
}

TEST(Polignac, Census) {
    EXPECT_EQ(polignac_census(mid(), 2, 100).count, 8u);
    EXPECT_EQ(polignac_census(mid(), 4, 31, true).pairs,
              (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 7}, {7, 11}, {13, 17}, {19, 23}}));
    EXPECT_EQ(polignac_census(mid(), 2, 1'000'000).count, 8169u);
}

TEST(TwinBetween, SmallPrimes) {
    SuiteOptions opts;
    opts.witness_cap = 100;
    const auto r = verify_twin_between(mid(), 13, opts);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.witnesses, (std::vector<std::vector<std::uint64_t>>{{11, 17, 19}, {13, 17, 19}}));
    EXPECT_TRUE(verify_twin_between(mid(), 500'000).ok());
}

TEST(Series, DiffRowAtThirteen) {
    const auto series = mu_nu_series(mid(), Family::diff, 15, 1);
    ASSERT_EQ(series.rows.size(), 14u);
    const auto& row = series.rows[11];
    EXPECT_EQ(row.n, 13u);
    EXPECT_EQ(row.count, 4u);
    EXPECT_EQ(row.position, 9u);
    EXPECT_DOUBLE_EQ(row.mu, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(*row.nu, 0.75);
    const auto csv = to_csv(series);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,alpha,t,mu,nu");
    EXPECT_NE(csv.find("\n13,4,9,0.3333333333333333,0.75\n"), std::string::npos);
}

TEST(Series, SumRowsAndStep) {
    const auto series = mu_nu_series(mid(), Family::sum, 20, 4);
    ASSERT_EQ(series.rows.size(), 5u);
    EXPECT_EQ(series.rows[0].n, 4u);
    EXPECT_EQ(series.rows[0].count, 2u);
    EXPECT_EQ(series.rows[0].position, 6u);
    const auto csv = to_csv(series);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,m0,k0,mu,nu");
}

TEST(Recurrence, BothFamilies) {
    for (auto family : {Family::sum, Family::diff}) {
        const auto r = recurrence_consistency(mid(), family, 100);
        EXPECT_TRUE(r.ok()) << to_json(r, false);
        EXPECT_GT(detail_u64(r, "steps_checked"), 90u);
    }
}

TEST(Families, Parse) {
    EXPECT_EQ(parse_family("sum"), Family::sum);
    EXPECT_EQ(parse_family("diff"), Family::diff);
    EXPECT_FALSE(parse_family("product"));
    EXPECT_EQ(to_string(Family::diff), "diff");
}

TEST(VerifyAll, DeterministicAcrossThreads) {
    SuiteOptions one;
    SuiteOptions many;
    many.threads = 8;
    const auto a = verify_all(mid(), 200000, one);
    const auto b = verify_all(mid(), 200000, many);
    ASSERT_EQ(a.size(), 5u);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(a[i].ok()) << a[i].claim;
        EXPECT_EQ(to_json(a[i], false), to_json(b[i], false));
    }
}

TEST(VerifyAll, Bounds) {
    const auto b = suite_bounds(1'000'000);
    EXPECT_EQ(b.max_even, 1'000'000u);
    EXPECT_EQ(b.m_max, 124'999u);
    EXPECT_EQ(b.p_max, 500'000u);
    EXPECT_EQ(b.recurrence_n_max, 5000u);
    EXPECT_THROW(suite_bounds(16), UsageError);
}
