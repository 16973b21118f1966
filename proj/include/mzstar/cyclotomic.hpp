#pragma once

#include <memory>
#include <vector>

#include "mzstar/pi_value.hpp"
#include "mzstar/rational.hpp"

namespace mzstar {

/// Dense integer polynomial, coefficient i of x^i.
using IntPolynomial = std::vector<Integer>;

/// Phi_N, by exact division of x^N - 1 by Phi_d for every proper divisor d.
/// Memoized; the returned polynomial is monic of degree phi(N).
const IntPolynomial& cyclotomic_poly(int N);

/// Element of Q(zeta_N) as a polynomial in zeta_N of degree < phi(N),
/// reduced modulo Phi_N. Since Q[x]/Phi_N is the field itself, an element is
/// rational exactly when its non-constant coefficients vanish.
class CycloElement {
 public:
  /// Zero of Q(zeta_N).
  explicit CycloElement(int N);
  CycloElement(int N, const Rational& constant);

  /// Reduces an arbitrary-degree polynomial in zeta_N.
  static CycloElement from_polynomial(int N, std::vector<Rational> coeffs);

  int order() const { return N_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_rational() const;
  bool is_zero() const;
  /// Constant coefficient; throws RationalityViolation unless is_rational().
  Rational to_rational() const;

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const Rational& rhs);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const Rational& b) { return a *= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);

  friend bool operator==(const CycloElement& a, const CycloElement& b) = default;

 private:
  int N_;
  std::vector<Rational> coeffs_;  // size phi(N)
};

/// zeta_N^e; e is reduced mod N (negative allowed).
CycloElement cyclo_root_pow(int N, long e);

/// zeta*({{2}^m, 3, {2}^m, 1}^d) through the root-of-unity expansion of
/// the tan/cot product, evaluated in Q(zeta_{2(m+1)}). d = 0 gives 1.
/// Throws RationalityViolation if the final sum is not rational.
PiValue t7_plain(int d, int m);

/// zeta*({{2}^m, 3, {2}^m, 1}^d, {2}^{m+1}). d = 0 gives 1.
PiValue t7_tail(int d, int m);

}  // namespace mzstar
