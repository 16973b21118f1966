#include "mzstar/pi_value.hpp"

#include "mzstar/errors.hpp"

namespace mzstar {

namespace {

void require_same_power(const PiValue& a, const PiValue& b) {
  if (a.pi_power != b.pi_power) {
    throw PiPowerMismatch("PiValue: cannot add pi^" + std::to_string(a.pi_power) + " and pi^" +
                          std::to_string(b.pi_power));
  }
}

}  // namespace

std::string PiValue::to_string() const {
  if (pi_power == 0) return coeff.to_string();
  std::string s = coeff.to_string() + "*pi";
  if (pi_power != 1) s += "^" + std::to_string(pi_power);
  return s;
}

PiValue& PiValue::operator+=(const PiValue& rhs) {
  require_same_power(*this, rhs);
  coeff += rhs.coeff;
  return *this;
}

PiValue& PiValue::operator-=(const PiValue& rhs) {
  require_same_power(*this, rhs);
  coeff -= rhs.coeff;
  return *this;
}

PiValue& PiValue::operator*=(const Rational& rhs) {
  coeff *= rhs;
  return *this;
}

PiValue& PiValue::operator/=(const Rational& rhs) {
  coeff /= rhs;
  return *this;
}

}  // namespace mzstar
