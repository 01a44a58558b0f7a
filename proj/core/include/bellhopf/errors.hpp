#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellhopf {

/// Input outside an operation's mathematical domain (e.g. exp of a series
/// with nonzero constant term).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size limit would be exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed; `position()` is the byte offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Numerical integration did not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double achieved_error)
      : std::runtime_error(what), value_(value), achieved_error_(achieved_error) {}

  double value() const noexcept { return value_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double value_;
  double achieved_error_;
};

}  // namespace bellhopf
