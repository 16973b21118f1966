#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzstar {

// Argument outside the range a closed form is stated for (e.g. d = 0 for the
// sum formulas, odd s for zeta_bar_even).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adding PiValues of different pi powers. Every formula in the library is
// homogeneous, so this always indicates a bug upstream.
class PiPowerMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A coefficient beyond the truncation order of a series was requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A cyclotomic sum that must be rational had a nonzero irrational part.
class RationalityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Index has no closed form among the implemented families.
class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Divergent index, or a numeric configuration that cannot meet its request.
class NumericPrecondition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mzstar
