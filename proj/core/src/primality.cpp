#include "primemat/primality.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "primemat/errors.hpp"

namespace primemat {
namespace {

constexpr std::array<char, 4> kMagic = {'P', 'M', 'L', 'B'};
constexpr std::uint16_t kVersion = 1;
constexpr std::size_t kHeaderBytes = 16;

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 31; bit != 0; bit >>= 1) {
        const std::uint64_t c = r | bit;
        if (c <= n / c) r = c;
    }
    return r;
}

std::uint64_t word_count(std::uint64_t limit) { return (limit >> 6) + 1; }

std::uint64_t byte_count(std::uint64_t limit) { return (limit >> 3) + 1; }

// Odd primes up to `bound` via a plain byte sieve.
std::vector<std::uint64_t> small_odd_primes(std::uint64_t bound) {
    std::vector<std::uint8_t> composite(bound + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 3; i <= bound; i += 2) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = 1;
    }
    return out;
}

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
    for (int b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, int bytes) {
    std::uint64_t v = 0;
    for (int b = 0; b < bytes; ++b) v |= std::uint64_t{in[offset + b]} << (8 * b);
    return v;
}

}  // namespace

bool PrimalityTable::is_prime(std::uint64_t n) const {
    if (words_.empty() || n > limit_)
        throw_range("is_prime: " + std::to_string(n) + " exceeds table limit " + std::to_string(limit_));
    return test(n);
}

std::uint64_t PrimalityTable::count() const noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<std::uint64_t> PrimalityTable::primes(std::uint64_t lo, std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    if (words_.empty()) return out;
    for_each_prime(lo, hi, [&](std::uint64_t p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<std::uint8_t> PrimalityTable::packed_bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(byte_count(limit_));
    for (std::uint64_t b = 0; b < byte_count(limit_); ++b)
        out.push_back(static_cast<std::uint8_t>(words_[b >> 3] >> (8 * (b & 7))));
    return out;
}

PrimalityTable PrimalityTable::from_packed_bytes(std::uint64_t limit, std::span<const std::uint8_t> bytes) {
    if (bytes.size() != byte_count(limit))
        throw FormatError("packed table: expected " + std::to_string(byte_count(limit)) + " bytes, got " +
                          std::to_string(bytes.size()));
    PrimalityTable t;
    t.limit_ = limit;
    t.words_.assign(word_count(limit), 0);
    for (std::size_t b = 0; b < bytes.size(); ++b) t.words_[b >> 3] |= std::uint64_t{bytes[b]} << (8 * (b & 7));
    // Clear padding so that equality compares only meaningful bits.
    if ((limit & 63) != 63) t.words_.back() &= (std::uint64_t{1} << ((limit & 63) + 1)) - 1;
    return t;
}

PrimalityTable build_table(std::uint64_t limit, const SieveOptions& options) {
    if (limit < 2) throw_usage("build_table: limit must be at least 2, got " + std::to_string(limit));
    if (limit > options.memory_budget_bytes * 8 || byte_count(limit) > options.memory_budget_bytes)
        throw ResourceError("build_table: limit " + std::to_string(limit) + " needs " +
                            std::to_string(byte_count(limit)) + " bytes, budget is " +
                            std::to_string(options.memory_budget_bytes));

    PrimalityTable t;
    t.limit_ = limit;
    t.words_.assign(word_count(limit), 0);
    auto& words = t.words_;
    const std::uint64_t root = isqrt(limit);

    if (limit <= options.segment_threshold) {
        // Every odd number >= 3 starts as a candidate.
        std::fill(words.begin(), words.end(), 0xAAAAAAAAAAAAAAAAull);
        words[0] &= ~std::uint64_t{0b10};
        words[0] |= 0b100;
        for (std::uint64_t p = 3; p <= root; p += 2) {
            if (!t.test(p)) continue;
            for (std::uint64_t j = p * p; j <= limit; j += 2 * p) words[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
        }
    } else {
        const auto base = small_odd_primes(root);
        const std::uint64_t span = std::max<std::uint64_t>(64, (options.segment_span + 63) & ~std::uint64_t{63});
        std::vector<std::uint8_t> flags;
        for (std::uint64_t lo = 0; lo <= limit; lo += span) {
            const std::uint64_t hi = std::min(limit, lo + span - 1);
            flags.assign(hi - lo + 1, 0);
            // flags[x] = 1 marks lo + x as prime; only odd slots are candidates.
            for (std::uint64_t n = lo | 1; n <= hi; n += 2) flags[n - lo] = 1;
            for (std::uint64_t p : base) {
                const std::uint64_t sq = p * p;
                if (sq > hi) break;
                std::uint64_t start = sq >= lo ? sq : ((lo + p - 1) / p) * p;
                if ((start & 1) == 0) start += p;
                for (std::uint64_t j = start; j <= hi; j += 2 * p) flags[j - lo] = 0;
            }
            if (lo == 0) {
                flags[1] = 0;
                flags[2] = 1;
            }
            for (std::uint64_t x = 0; x < flags.size(); ++x)
                if (flags[x]) words[(lo + x) >> 6] |= std::uint64_t{1} << ((lo + x) & 63);
        }
    }

    if ((limit & 63) != 63) words.back() &= (std::uint64_t{1} << ((limit & 63) + 1)) - 1;
    return t;
}

std::vector<std::uint8_t> serialize_table(const PrimalityTable& table) {
    std::vector<std::uint8_t> out;
    const auto bits = table.packed_bytes();
    out.reserve(kHeaderBytes + bits.size());
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    put_le(out, kVersion, 2);
    put_le(out, 0, 2);
    put_le(out, table.limit(), 8);
    out.insert(out.end(), bits.begin(), bits.end());
    return out;
}

PrimalityTable deserialize_table(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderBytes) throw FormatError("table file truncated: header incomplete");
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
        throw FormatError("table file: bad magic, expected \"PMLB\"");
    const auto version = get_le(bytes, 4, 2);
    if (version != kVersion) throw FormatError("table file: unsupported version " + std::to_string(version));
    if (get_le(bytes, 6, 2) != 0) throw FormatError("table file: reserved field must be zero");
    const std::uint64_t limit = get_le(bytes, 8, 8);
    if (limit < 2) throw FormatError("table file: limit below 2");
    const auto payload = bytes.subspan(kHeaderBytes);
    if (payload.size() != byte_count(limit))
        throw FormatError("table file truncated: expected " + std::to_string(byte_count(limit)) +
                          " payload bytes, found " + std::to_string(payload.size()));
    return PrimalityTable::from_packed_bytes(limit, payload);
}

void save_table(const PrimalityTable& table, const std::filesystem::path& path) {
    const auto bytes = serialize_table(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("save_table: cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw UsageError("save_table: write failed for " + path.string());
}

PrimalityTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("load_table: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_table(bytes);
}

OddIndicator::OddIndicator(std::vector<std::uint8_t> chi) : chi_(std::move(chi)) {
    for (std::size_t i = 0; i < chi_.size(); ++i) {
        if (chi_[i] > 1) throw_usage("OddIndicator: entries must be 0 or 1");
        if (chi_[i]) prime_indices_.push_back(i + 1);
    }
}

bool OddIndicator::at(std::uint64_t i) const {
    if (i < 1 || i > chi_.size())
        throw_range("indicator index " + std::to_string(i) + " outside [1, " + std::to_string(chi_.size()) + "]");
    return chi_[i - 1] != 0;
}

OddIndicator odd_indicator(const PrimalityTable& table, std::uint64_t n) {
    if (table.limit() < 2 || n > (table.limit() - 1) / 2)
        throw_range("odd_indicator: 2n+1 = " + std::to_string(2 * n + 1) + " exceeds table limit " +
                    std::to_string(table.limit()));
    std::vector<std::uint8_t> chi(n);
    for (std::uint64_t i = 1; i <= n; ++i) chi[i - 1] = table.test(2 * i + 1) ? 1 : 0;
    return OddIndicator(std::move(chi));
}

}  // namespace primemat
