#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyckt {

using Int = long long;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// enumeration or table size above the configured cap
struct CapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotGarnirNode : Error {
    using Error::Error;
};

struct BoxMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// exact arithmetic left the 64-bit range
struct OverflowError : Error {
    using Error::Error;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int factorial(int n);
Int binomial(int n, int k);

}  // namespace dyckt
