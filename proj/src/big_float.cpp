#include "mzstar/big_float.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzstar {

namespace {

mpfr_prec_t checked_prec(long bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("BigFloat: precision out of range");
  return static_cast<mpfr_prec_t>(bits);
}

std::string format(const char* fmt, int digits, mpfr_srcptr x) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, digits, x) < 0) throw std::runtime_error("BigFloat: formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// Raise the left operand's precision so the result keeps the wider input.
void widen(mpfr_ptr a, mpfr_srcptr b) {
  if (mpfr_get_prec(b) > mpfr_get_prec(a)) mpfr_prec_round(a, mpfr_get_prec(b), MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, checked_prec(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& q, long precision_bits) {
  BigFloat x(precision_bits);
  mpfr_set_q(x.value_, q.raw().get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_string(const std::string& decimal, long precision_bits) {
  BigFloat x(precision_bits);
  if (mpfr_set_str(x.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("BigFloat: not a number: " + decimal);
  }
  return x;
}

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat x(precision_bits);
  mpfr_const_pi(x.value_, MPFR_RNDN);
  return x;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat x(*this);
  mpfr_neg(x.value_, x.value_, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::abs() const {
  BigFloat x(*this);
  mpfr_abs(x.value_, x.value_, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::pow(unsigned long e) const {
  BigFloat x(precision());
  mpfr_pow_ui(x.value_, value_, e, MPFR_RNDN);
  return x;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string BigFloat::to_string(int digits) const {
  return format("%.*Re", std::max(digits, 1) - 1, value_);
}

std::string BigFloat::to_decimal(int digits) const {
  return format("%.*Rg", std::max(digits, 1), value_);
}

int decimal_digits_for(long precision_bits) {
  return std::max(1, static_cast<int>(static_cast<double>(precision_bits - 16) * 0.30103));
}

}  // namespace mzstar
