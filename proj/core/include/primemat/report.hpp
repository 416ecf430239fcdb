// report.hpp
// Outcome of a bounded verification run. Claims over unbounded ranges can
// only ever be "verified up to N" or carry a concrete counterexample.

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace primemat {

enum class ClaimStatus {
    verified,
    counterexample,
    witness_not_found,  // searched exhaustively below the limit, nothing found
};

std::string_view to_string(ClaimStatus status);

using DetailValue = std::variant<std::uint64_t, bool, std::string>;

struct ClaimReport {
    std::string claim;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    ClaimStatus status = ClaimStatus::verified;
    // Range-ordered witness rows; the meaning of each column is claim-specific.
    std::vector<std::vector<std::uint64_t>> witnesses;
    // Populated only when status == counterexample.
    std::vector<std::uint64_t> counterexample;
    std::vector<std::pair<std::string, DetailValue>> details;
    double elapsed_ms = 0.0;

    bool ok() const noexcept { return status == ClaimStatus::verified; }

    const DetailValue* detail(std::string_view key) const;
};

// One compact JSON object:
//   {"claim", "range": [lo, hi], "status", "witnesses" | "counterexample",
//    "details"?, "elapsed_ms"}
// With include_timing = false, elapsed_ms is written as null so that repeated
// runs are byte-identical.
std::string to_json(const ClaimReport& report, bool include_timing = true);

// Shortest round-trip decimal form; stable across runs and platforms.
std::string format_ratio(double value);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace primemat
