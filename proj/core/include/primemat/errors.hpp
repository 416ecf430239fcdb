// errors.hpp
// Exception hierarchy shared by every primemat module. The CLI maps
// UsageError and RangeError to exit code 2.

#pragma once

#include <stdexcept>
#include <string>

namespace primemat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: parity, ordering, below-minimum values.
class UsageError : public Error {
public:
    using Error::Error;
};

// A query outside the bounds of a table, view, or sequence.
class RangeError : public Error {
public:
    using Error::Error;
};

// Bad magic, version, or truncated payload in a persisted table.
class FormatError : public Error {
public:
    using Error::Error;
};

// A request that would exceed the configured memory budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_usage(const std::string& what);
[[noreturn]] void throw_range(const std::string& what);

}  // namespace primemat
