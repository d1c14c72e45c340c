#pragma once

#include <stdexcept>
#include <string>

namespace dophom {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text could not be parsed; `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Two operators or chains of different matrix rank were combined.
struct RankMismatchError : Error {
    using Error::Error;
};

/// A derivative-order cap or basis cap was exceeded.
struct CapExceededError : Error {
    using Error::Error;
};

/// An input failed a structural precondition (not a cycle, wrong degree, ...).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace dophom
