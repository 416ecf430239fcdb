// cli.hpp
// Command-line driver. Exit codes: 0 = query served or every claim verified,
// 1 = counterexample or witness not found, 2 = usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primemat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primemat::cli
