#include <gtest/gtest.h>

#include "primemat/parallel.hpp"
#include "primemat/report.hpp"

using namespace primemat;

TEST(Parallel, PartitionCoversRange) {
    for (std::uint64_t parts : {1ull, 3ull, 7ull, 64ull}) {
        const auto chunks = partition_range(5, 105, parts);
        ASSERT_FALSE(chunks.empty());
        EXPECT_EQ(chunks.front().begin, 5u);
        EXPECT_EQ(chunks.back().end, 105u);
        for (std::size_t i = 1; i < chunks.size(); ++i) EXPECT_EQ(chunks[i].begin, chunks[i - 1].end);
        EXPECT_LE(chunks.size(), parts);
    }
    EXPECT_TRUE(partition_range(7, 7, 4).empty());
    EXPECT_EQ(partition_range(0, 3, 10).size(), 3u);
}

TEST(Parallel, MapChunksOrdered) {
    auto sum = [](const Chunk& c) {
        std::uint64_t s = 0;
        for (auto i = c.begin; i < c.end; ++i) s += i;
        return s;
    };
    const auto a = map_chunks(0, 10000, 16, 1, sum);
    const auto b = map_chunks(0, 10000, 16, 6, sum);
    EXPECT_EQ(a, b);
    std::uint64_t total = 0;
    for (auto v : a) total += v;
    EXPECT_EQ(total, 10000ull * 9999 / 2);
}

TEST(Parallel, MapChunksRethrows) {
    auto fn = [](const Chunk& c) -> int {
        if (c.begin >= 50) throw std::runtime_error("boom");
        return 0;
    };
    EXPECT_THROW(map_chunks(0, 100, 10, 4, fn), std::runtime_error);
}

TEST(Report, JsonLayout) {
    ClaimReport r;
    r.claim = "demo";
    r.range_lo = 6;
    r.range_hi = 10;
    r.status = ClaimStatus::verified;
    r.witnesses = {{6, 3, 3}};
    r.details.emplace_back("checked", std::uint64_t{3});
    r.elapsed_ms = 1.5;
    EXPECT_EQ(to_json(r, false),
              R"({"claim":"demo","range":[6,10],"status":"verified","witnesses":[[6,3,3]],)"
              R"("details":{"checked":3},"elapsed_ms":null})");
    r.status = ClaimStatus::counterexample;
    r.counterexample = {8};
    const auto j = to_json(r, false);
    EXPECT_NE(j.find(R"("counterexample":[8])"), std::string::npos);
    EXPECT_EQ(j.find("witnesses"), std::string::npos);
    EXPECT_EQ(to_string(ClaimStatus::witness_not_found), "witness-not-found-below-limit");
}

TEST(Report, Ratios) {
    EXPECT_EQ(format_ratio(0.75), "0.75");
    EXPECT_EQ(format_ratio(1.0 / 3.0), "0.3333333333333333");
    EXPECT_EQ(format_ratio(1.0), "1");
}
