#pragma once

#include <stdexcept>
#include <string>

namespace cliffbrack {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unknown variable, malformed multiset, size-cap violations.
struct ContextError : Error {
    using Error::Error;
};

/// Precondition violation on an operation (degree mismatch, bad partition, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Syntax error with position information.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), column(col_) {}
};

/// Invariant breach inside the engine: fuel exhaustion, non-decreasing rewrite,
/// confluence failure. Signals a rule-set bug, never silent nontermination.
struct InternalError : Error {
    using Error::Error;
};

} // namespace cliffbrack
