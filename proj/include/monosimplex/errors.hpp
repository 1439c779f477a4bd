#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monosimplex {

// Bad input to an operation: violated precondition, malformed value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Text that does not follow a grammar. `position` is a 0-based column.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " (at column " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Two simplices with different edge products lie in different orbits.
class NoWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A materialization guard (point count, factorial size, canvas) tripped.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monosimplex
