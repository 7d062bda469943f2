#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

// Syntax or validation failure in polynomial input. `position` is a byte
// offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The Hilbert function failed to stabilize at T+1, or the singular-locus
// analysis found a positive-dimensional singular scheme.
class NonIsolatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal limit was exhausted: chart retries, degree cap, exponent cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace milnor
