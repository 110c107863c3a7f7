#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mir {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: ambient dimension mismatches, unit generators, variables
/// missing from every generator, out-of-range exponents, malformed documents.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Syntax error carrying a position in the input text (1-based).
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : ValidationError(message + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A computation guard tripped: generator or vertex bounds exceeded, or
/// integer overflow in coefficient arithmetic.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace mir
