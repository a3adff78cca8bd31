#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alexinv {

/// Malformed polynomial or presentation text. `position()` is a byte offset
/// into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in rings of different arity (number of variables).
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold (b1 = 0, zero
/// polynomial where a unit orbit is needed, Levine hypotheses, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size limit (cover index, degree) would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alexinv
