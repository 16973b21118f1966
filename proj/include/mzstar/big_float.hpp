#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <mpfr.h>

#include "mzstar/rational.hpp"

namespace mzstar {

/// Owning handle for an MPFR float. Binary operations round to the larger
/// of the operand precisions, to nearest.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 192);
  BigFloat(long value, long precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& q, long precision_bits);
  static BigFloat from_string(const std::string& decimal, long precision_bits);
  static BigFloat pi(long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  BigFloat abs() const;
  BigFloat pow(unsigned long e) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with the given number of significant digits,
  /// e.g. "1.3529040421e+00".
  std::string to_string(int digits) const;
  /// Fixed-point-ish rendering with `digits` significant digits and no
  /// exponent when the magnitude is moderate.
  std::string to_decimal(int digits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(20); }

 private:
  mpfr_t value_;
};

/// Significant decimal digits supported by a given binary precision,
/// keeping a guard of 16 bits.
int decimal_digits_for(long precision_bits);

}  // namespace mzstar
