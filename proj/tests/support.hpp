// support.hpp
// Shared tables so each test binary sieves a given limit once.

#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "primemat/primality.hpp"

namespace primemat::fixtures {

inline const PrimalityTable& table(std::uint64_t limit) {
    static std::map<std::uint64_t, std::unique_ptr<PrimalityTable>> cache;
    auto& slot = cache[limit];
    if (!slot) slot = std::make_unique<PrimalityTable>(build_table(limit));
    return *slot;
}

}  // namespace primemat::fixtures
