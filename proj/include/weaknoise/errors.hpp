#pragma once

#include <stdexcept>
#include <string>

namespace weaknoise {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The closed-form exponent and the optimal rate split are only valid when the
// cost-function parameters satisfy the high-SNR admissibility condition
// d*max(a) - sum(a) <= q*C; callers that need them outside that region get this.
struct A1ViolatedError : Error {
    using Error::Error;
};

struct DimensionTooLargeError : Error {
    using Error::Error;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct EmptyPathError : Error {
    using Error::Error;
};

struct ZeroVarianceError : Error {
    using Error::Error;
};

struct CodebookTooLargeError : Error {
    using Error::Error;
};

// A probe had no non-outage trial, so its conditional mean cost is undefined.
struct AllOutageError : Error {
    using Error::Error;
};

struct NonpositiveCostError : Error {
    using Error::Error;
};

struct DegenerateGridError : Error {
    using Error::Error;
};

// Invalid user-supplied configuration (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace weaknoise
