#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File / container errors.
struct BadMagic : Error {
    using Error::Error;
};
struct TruncatedFile : Error {
    using Error::Error;
};
struct NonFiniteData : Error {
    using Error::Error;
};
struct IoFailure : Error {
    using Error::Error;
};

// Shape / domain errors.
struct NotMultipleOf256 : Error {
    explicit NotMultipleOf256(std::size_t remainder)
        : Error("tensor length is not a multiple of 256 (remainder=" + std::to_string(remainder) + ")"),
          remainder(remainder) {}
    std::size_t remainder;
};
struct NonFinite : Error {
    using Error::Error;
};
struct WrongGroupLength : Error {
    using Error::Error;
};
struct DegenerateRegression : Error {
    DegenerateRegression() : Error("regression denominator is degenerate (constant codes)") {}
};

// Codec errors.
struct LengthMismatch : Error {
    using Error::Error;
};
struct CodeOutOfRange : Error {
    using Error::Error;
};

// Interval errors.
struct AlignmentMismatch : Error {
    using Error::Error;
};

// CLI configuration errors (exit code 2).
struct UsageError : Error {
    using Error::Error;
};

} // namespace kq
