// grid.hpp
// Dense rendering of an implicit matrix. Only used for small orders.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primemat {

using Grid = std::vector<std::vector<std::uint64_t>>;

inline constexpr std::uint64_t kDefaultRenderCap = 64;

// One line per row, entries separated by a single space, '\n' terminated.
inline std::string format_grid(const Grid& grid) {
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace primemat
