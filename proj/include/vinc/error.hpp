#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vinc {

/// Raised by the text parsers (permutations, patterns, statistic specs).
/// Carries the 1-based character position of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& reason, std::size_t position)
      : std::runtime_error(reason + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an operation is applied outside its domain, e.g. a map
/// defined on 132-avoiders receives a permutation containing 132.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace vinc
