// oracles.hpp
// Brute-force reference computations for tests. Nothing here touches the
// sieve or the sequence algorithms under test.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace primemat::oracle {

inline bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint8_t> trial_indicator(std::uint64_t n) {
    std::vector<std::uint8_t> chi(n);
    for (std::uint64_t i = 1; i <= n; ++i) chi[i - 1] = trial_prime(2 * i + 1) ? 1 : 0;
    return chi;
}

// L(k) for k = 1..2n-1: ordered odd-prime pairs (p, q), both <= 2n+1,
// with p + q = 2(k + 2).
inline std::vector<std::uint64_t> sum_sequence(std::uint64_t n) {
    std::vector<std::uint64_t> odd_primes;
    for (std::uint64_t p = 3; p <= 2 * n + 1; p += 2)
        if (trial_prime(p)) odd_primes.push_back(p);
    std::vector<std::uint64_t> out(2 * n - 1, 0);
    for (std::uint64_t p : odd_primes)
        for (std::uint64_t q : odd_primes) out[(p + q) / 2 - 3] += 1;
    return out;
}

// f(k) for k = 1..n: unordered prime pairs (q, q + 2(k - 1)), both in 3..2n+1,
// with distinct members.
inline std::vector<std::uint64_t> diff_sequence(std::uint64_t n) {
    std::vector<std::uint64_t> out(n, 0);
    for (std::uint64_t q = 3; q <= 2 * n + 1; q += 2) {
        if (!trial_prime(q)) continue;
        for (std::uint64_t p = q + 2; p <= 2 * n + 1; p += 2)
            if (trial_prime(p)) out[(p - q) / 2] += 1;
    }
    return out;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_pairs(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 3; p + 2 <= limit; p += 2)
        if (trial_prime(p) && trial_prime(p + 2)) out.emplace_back(p, p + 2);
    return out;
}

}  // namespace primemat::oracle
