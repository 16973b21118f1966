#pragma once

#include <ostream>
#include <string>

#include "mzstar/rational.hpp"

namespace mzstar {

/// Exact number coeff * pi^pi_power. The result type of every closed form.
struct PiValue {
  Rational coeff;
  unsigned pi_power = 0;

  PiValue() = default;
  PiValue(Rational c, unsigned power) : coeff(std::move(c)), pi_power(power) {}

  static PiValue one() { return PiValue(Rational(1), 0); }
  static PiValue zero(unsigned power) { return PiValue(Rational(0), power); }

  std::string to_string() const;

  // Addition requires equal pi powers; throws PiPowerMismatch otherwise.
  PiValue& operator+=(const PiValue& rhs);
  PiValue& operator-=(const PiValue& rhs);
  PiValue& operator*=(const Rational& rhs);
  PiValue& operator/=(const Rational& rhs);

  friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
  friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
  friend PiValue operator*(PiValue a, const Rational& b) { return a *= b; }
  friend PiValue operator*(const Rational& b, PiValue a) { return a *= b; }
  friend PiValue operator/(PiValue a, const Rational& b) { return a /= b; }
  friend PiValue operator*(const PiValue& a, const PiValue& b) {
    return PiValue(a.coeff * b.coeff, a.pi_power + b.pi_power);
  }
  PiValue operator-() const { return PiValue(-coeff, pi_power); }

  friend bool operator==(const PiValue& a, const PiValue& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const PiValue& v) { return os << v.to_string(); }
};

}  // namespace mzstar
