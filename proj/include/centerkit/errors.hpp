#pragma once

#include <stdexcept>
#include <string>

namespace centerkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The configuration has no unique center (e.g. an even collinear medoid).
class NonUnique : public Error {
public:
    using Error::Error;
};

/// The weights of a barycentric combination sum to (numerically) zero.
class ZeroNormalizer : public Error {
public:
    using Error::Error;
};

/// A weight function is evaluated outside the set where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input is degenerate: collinear triangle, zero measure, etc.
class Degenerate : public Error {
public:
    using Error::Error;
};

class NonSimple : public Error {
public:
    using Error::Error;
};

class CoincidentCenters : public Error {
public:
    using Error::Error;
};

class SingletonUnsupported : public Error {
public:
    using Error::Error;
};

/// Schema or invariant violation while reading a JSON document. The message
/// starts with a JSON path such as `$.points[2]`.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace centerkit
