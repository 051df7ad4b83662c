#pragma once

#include <stdexcept>
#include <string>

namespace hypervel {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input lies outside the operation's (or type's) declared domain.
struct DomainViolation : Error {
    using Error::Error;
};

/// The boundary element c admits no inverse under the requested operation.
struct BoundaryNotInvertible : Error {
    using Error::Error;
};

/// Two vector operands have different dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A denominator is too close to zero for a meaningful result.
struct SingularDenominator : Error {
    using Error::Error;
};

/// An intermediate value of a chained map is exactly zero.
struct DivisionByZero : Error {
    using Error::Error;
};

/// The multiplicative inverse required by an aggregation does not exist.
struct InverseUndefined : Error {
    using Error::Error;
};

/// Two operands carry incompatible parameter sets.
struct ParamsMismatch : Error {
    using Error::Error;
};

} // namespace hypervel
