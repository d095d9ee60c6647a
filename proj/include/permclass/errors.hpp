#ifndef PERMCLASS_ERRORS_HPP
#define PERMCLASS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permclass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two permutations of different orders were combined.
class LengthMismatch : public Error {
public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("incompatible orders: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// Malformed permutation literal or class expression. `position` is a
/// zero-based character offset into the parsed text.
class ParseError : public Error {
public:
  ParseError(const std::string &message, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A search or enumeration would exceed the configured order cap.
class ResourceLimitExceeded : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A result that a theorem guarantees was not produced. Always a bug.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// A verification check name that is not in the registry.
class UnknownCheck : public Error {
public:
  explicit UnknownCheck(const std::string &name)
      : Error("unknown check: " + name) {}
};

} // namespace permclass

#endif
