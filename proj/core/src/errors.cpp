#include "primemat/errors.hpp"

namespace primemat {

void throw_usage(const std::string& what) { throw UsageError(what); }

void throw_range(const std::string& what) { throw RangeError(what); }

}  // namespace primemat
