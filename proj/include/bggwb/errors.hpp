#pragma once

#include <stdexcept>
#include <string>

namespace bggwb {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live over different base fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Matrix or vector shapes do not fit together.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation was called on input violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A requested window needs more jet precision than the complex carries.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, int required_precision)
        : Error(what), required_(required_precision) {}
    int required_precision() const noexcept { return required_; }

private:
    int required_;
};

/// Malformed input text (file syntax, polynomial strings, scalars).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input whose mathematical invariants fail
/// (anticommutation, d^2 = 0, chain-map identity, ...).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace bggwb
