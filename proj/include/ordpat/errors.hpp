#pragma once

#include <stdexcept>
#include <string>

namespace ordpat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structure invariant or an operation precondition does not hold.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 when no position applies.
class ParseError : public Error {
public:
    ParseError(const std::string & message, int line, int column) :
        Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message : message),
        _message(message),
        _line(line),
        _column(column)
    {
    }

    const std::string & message() const { return _message; }
    int line() const { return _line; }
    int column() const { return _column; }

private:
    std::string _message;
    int _line;
    int _column;
};

/// A search was asked to run above its configured size bound.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

} // namespace ordpat
