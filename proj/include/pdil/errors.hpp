#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdil {

/// Category of a failure; the CLI maps these onto exit codes.
enum class ErrorKind {
    Parse,               // malformed text input (exit 2)
    Usage,               // invalid flag combination (exit 2)
    Precondition,        // input violates an operation's contract
    NonClosingScalingSet,
    InvalidCompletion,
    NotSubordinated,
    Unpartitionable,
    UnresolvedPath,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
          position_(position), detail_(what) {}

    std::size_t position() const noexcept { return position_; }
    /// Message without the position suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

} // namespace pdil
