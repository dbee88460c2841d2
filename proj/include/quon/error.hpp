#pragma once

#include <stdexcept>
#include <string>

namespace quon {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An evaluation point is missing a value for a variable that occurs in the input.
struct MissingAssignment : Error {
    using Error::Error;
};

// A matrix inversion was requested for a matrix with zero determinant.
struct SingularMatrix : Error {
    using Error::Error;
};

// Polynomial division or gcd with a zero divisor.
struct DivisionByZeroPoly : Error {
    using Error::Error;
};

// Two words that must have equal length do not.
struct LengthMismatch : Error {
    using Error::Error;
};

// Two containers that must have matching dimensions do not.
struct SizeMismatch : Error {
    using Error::Error;
};

// The request exceeds a documented size guard.
struct ResourceLimit : Error {
    using Error::Error;
};

// A sampling verification was requested with fewer samples than the minimum.
struct SampleCountTooSmall : Error {
    using Error::Error;
};

// A point that must satisfy q[j][i] == conj(q[i][j]) does not.
struct NotHermitian : Error {
    using Error::Error;
};

// A point coordinate lies outside the open unit disc.
struct DiscViolation : Error {
    using Error::Error;
};

// A leading principal minor that must be real has a nonzero imaginary part.
// Signals an implementation bug, not bad input.
struct NonRealMinor : Error {
    using Error::Error;
};

}  // namespace quon
