// primality.hpp
// Bit-packed primality table over the integers 0..limit, plus the odd-prime
// indicator vectors consumed by both matrix families.
//
// Encoding:
//   bit n of the table  <->  integer n   (LSB-first within each byte)
//
// A table is immutable once built; any number of threads may query it.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace primemat {

struct SieveOptions {
    // Limits above this switch to the segmented sieve.
    std::uint64_t segment_threshold = std::uint64_t{1} << 27;
    // Integers covered per segment (rounded up to a multiple of 64).
    std::uint64_t segment_span = std::uint64_t{1} << 22;
    // Upper bound on the packed table size in bytes.
    std::uint64_t memory_budget_bytes = std::uint64_t{4} << 30;
};

class PrimalityTable {
public:
    PrimalityTable() = default;

    std::uint64_t limit() const noexcept { return limit_; }

    // Throws RangeError when n > limit().
    bool is_prime(std::uint64_t n) const;

    // Unchecked variant for hot loops that have already validated bounds.
    bool test(std::uint64_t n) const noexcept {
        return (words_[n >> 6] >> (n & 63)) & 1u;
    }

    // Number of primes in [0, limit].
    std::uint64_t count() const noexcept;

    // Calls fn(p) for every prime p in [lo, hi] in increasing order; hi is
    // clamped to limit(). Stops early when fn returns false.
    template <typename Fn>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) const {
        if (words_.empty()) return;
        if (hi > limit_) hi = limit_;
        if (lo > hi) return;
        std::size_t w = lo >> 6;
        const std::size_t last = hi >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (lo & 63));
        for (;;) {
            if (w == last && (hi & 63) != 63) word &= (std::uint64_t{1} << ((hi & 63) + 1)) - 1;
            while (word != 0) {
                const std::uint64_t n = (std::uint64_t{w} << 6) + std::countr_zero(word);
                if (!fn(n)) return;
                word &= word - 1;
            }
            if (w == last) return;
            word = words_[++w];
        }
    }

    // All primes in [lo, hi].
    std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) const;

    // Packed bytes in the persisted layout: (limit + 8) / 8 bytes.
    std::vector<std::uint8_t> packed_bytes() const;

    // Rebuilds a table from packed bytes. Padding bits beyond limit are
    // ignored. Throws FormatError when the byte count does not match.
    static PrimalityTable from_packed_bytes(std::uint64_t limit, std::span<const std::uint8_t> bytes);

    friend bool operator==(const PrimalityTable&, const PrimalityTable&) = default;

private:
    friend PrimalityTable build_table(std::uint64_t, const SieveOptions&);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> words_;
};

// Sieve of Eratosthenes into a packed table. Segmented above
// options.segment_threshold. Throws UsageError for limit < 2 and
// ResourceError when the table would exceed options.memory_budget_bytes.
PrimalityTable build_table(std::uint64_t limit, const SieveOptions& options = {});

// Persisted layout, all integers little-endian:
//   "PMLB" | u16 version = 1 | u16 reserved = 0 | u64 limit | packed bits
void save_table(const PrimalityTable& table, const std::filesystem::path& path);
PrimalityTable load_table(const std::filesystem::path& path);

std::vector<std::uint8_t> serialize_table(const PrimalityTable& table);
PrimalityTable deserialize_table(std::span<const std::uint8_t> bytes);

// chi[i] = 1 iff 2i+1 is prime, for the 1-based matrix indices i = 1..n.
class OddIndicator {
public:
    OddIndicator() = default;
    explicit OddIndicator(std::vector<std::uint8_t> chi);

    std::uint64_t order() const noexcept { return chi_.size(); }

    // 1-based; throws RangeError outside [1, order()].
    bool at(std::uint64_t i) const;
    bool operator[](std::uint64_t i) const noexcept { return chi_[i - 1] != 0; }

    // 0-based view, chi_[0] corresponds to i = 1.
    std::span<const std::uint8_t> values() const noexcept { return chi_; }

    // Increasing 1-based indices i with chi[i] = 1.
    const std::vector<std::uint64_t>& prime_indices() const noexcept { return prime_indices_; }

    std::uint64_t prime_count() const noexcept { return prime_indices_.size(); }

    friend bool operator==(const OddIndicator& a, const OddIndicator& b) { return a.chi_ == b.chi_; }

private:
    std::vector<std::uint8_t> chi_;
    std::vector<std::uint64_t> prime_indices_;
};

// Throws RangeError when 2n+1 exceeds the table limit.
OddIndicator odd_indicator(const PrimalityTable& table, std::uint64_t n);

}  // namespace primemat
