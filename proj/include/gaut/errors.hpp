#ifndef GAUT_ERRORS_HPP
#define GAUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaut {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (alphabet files, automaton files, words, expressions).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg) {}
};

// An operation was invoked on values that violate its preconditions
// (type mismatch, alphabet mismatch, silent transitions present, ...).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace gaut

#endif
