#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semidp {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands from different semirings.
class SemiringMismatch : public Error {
public:
    using Error::Error;
};

// Scope or index precondition violated (projection outside domain, out-of-range index).
class DomainError : public Error {
public:
    using Error::Error;
};

// Tuples disagree on a shared variable.
class ConcatenationError : public Error {
public:
    using Error::Error;
};

// Malformed semiring table, tree shape or problem content.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A table or solution set would exceed its configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Integer overflow in a built-in semiring operation.
class OverflowError : public Error {
public:
    using Error::Error;
};

// The requested operation is undefined for the semiring (e.g. non-selective).
class RefusedError : public Error {
public:
    using Error::Error;
};

// Text input error carrying a 1-based line number (0 when not line-specific).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line), detail_(message) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

}  // namespace semidp
