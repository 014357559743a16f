#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubicf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments does not hold (zero polynomial,
/// degree too small, rational input where an irrational is needed, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Raised by facilities that only make sense for cubic irrationalities.
class CubicOnlyError : public DomainError {
public:
    explicit CubicOnlyError(std::string const & what)
        : DomainError(what + ": theorem is cubic-specific") {}
};

/// Malformed polynomial or number text. `offset` is a byte offset into
/// the source string.
class ParseError : public Error {
public:
    ParseError(std::string const & msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }
private:
    std::size_t offset_;
};

class RootSelectionError : public Error {
public:
    using Error::Error;
};

/// Polynomial of degree <= 3 has a rational root (or is not squarefree)
/// where an irreducible one is required.
class ReducibleError : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold by construction failed. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace cubicf
