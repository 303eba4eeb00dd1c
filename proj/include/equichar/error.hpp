#pragma once

#include <stdexcept>
#include <string>

namespace equichar {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, rationals, group specs).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A datum violates a documented invariant.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree produced different values.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// A configurable size cap was exceeded.
class CapError : public Error {
public:
    using Error::Error;
};

/// Arithmetic domain errors: division by zero, non-invertible Galois twist.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace equichar
