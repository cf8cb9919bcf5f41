#pragma once

#include <stdexcept>
#include <string>

namespace orbitcalc {

/// Raised when caller-supplied data violates an operation's precondition
/// (malformed text, wrong type, non-special input, size mismatch).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a result fails a post-condition that the mathematics guarantees.
/// Seeing one of these means a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace orbitcalc
