#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symfun {

/// Base class of all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematical precondition violated: weight mismatch, zero alpha,
/// box outside a diagram, unsupported constant term, exponent overflow.
struct DomainError : Error {
    using Error::Error;
};

/// Expression syntax error, with a 1-based column position.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t column)
        : Error(what), column(column) {}
    std::size_t column;
};

/// Filesystem or serialization failure (includes cache version/checksum
/// rejection).
struct IoError : Error {
    using Error::Error;
};

} // namespace symfun
