#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclokin {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sub-expression is singular at the evaluation point (division by a
/// jet with zero value, sqrt of a negative value, sqrt at zero with
/// derivatives requested).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A derivative of order higher than the jet carries was requested.
class OrderError : public Error {
public:
    using Error::Error;
};

/// Malformed expression text. `position` is the byte offset into the
/// source string where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position;
};

/// A curve document is missing fields or has fields of the wrong shape.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A matrix that must be inverted is singular within tolerance.
class SingularError : public Error {
public:
    using Error::Error;
};

/// det(dB/dt) vanishes: no pole point exists at this instant.
class SingularPoleError : public SingularError {
public:
    using SingularError::SingularError;
};

/// The generating curve passes through (or too close to) the origin.
class OriginError : public Error {
public:
    using Error::Error;
};

/// The cross-sum condition a1*a2 + a2*a3 + a3*a1 = 0 fails.
class NotAdmissibleError : public Error {
public:
    using Error::Error;
};

/// The curve does not lie on the unit sphere at the evaluation point.
class NotSphericalError : public Error {
public:
    using Error::Error;
};

/// No built-in curve with the requested name.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

} // namespace cyclokin
