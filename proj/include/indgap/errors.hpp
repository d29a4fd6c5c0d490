#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indgap {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a byte offset for graph6 input and a
/// 1-based line number for edge-list input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Violated precondition or invalid argument.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Input exceeds a size or search budget.
class CapacityError : public Error {
public:
  using Error::Error;
};

}  // namespace indgap
