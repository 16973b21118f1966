#pragma once

#include <cstddef>
#include <vector>

#include "mzstar/pi_value.hpp"
#include "mzstar/rational.hpp"

namespace mzstar {

/// Truncated power series in z whose z^n coefficient is q_n * pi^n; only the
/// rationals q_n are stored. Because every coefficient carries exactly the
/// power of pi matching its degree, products, reciprocals, exp and log of
/// graded series are graded again and reduce to plain rational arithmetic
/// on the q_n.
///
/// Coefficients are known for 0 <= n <= truncation(); asking for anything
/// beyond that throws TruncationError rather than returning zero.
class GradedSeries {
 public:
  GradedSeries() = default;
  /// Coefficients q_0 .. q_T; the truncation order is T = coeffs.size() - 1.
  explicit GradedSeries(std::vector<Rational> coeffs);

  /// All-zero series known up to z^truncation.
  static GradedSeries zero(int truncation);
  static GradedSeries one(int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const;
  Rational& mutable_at(int n);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// The z^n term as a PiValue with pi power n.
  PiValue term(int n) const { return PiValue((*this)[n], static_cast<unsigned>(n)); }

  /// Same series cut down to truncation order t (t <= truncation()).
  GradedSeries truncated(int t) const;

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// pole * (pi z)^{-1} + regular(z). Just enough Laurent structure for
/// cot(pi z / 2); it only ever gets multiplied by a series without
/// constant term, which lands back in GradedSeries.
struct PolarSeries {
  Rational pole;
  GradedSeries regular;
};

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_scale(const GradedSeries& a, const Rational& c);

/// Cauchy product; truncation is the smaller of the two.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);

/// Product of a polar series with a series whose constant term is zero.
/// Truncation is min(a.regular.truncation(), b.truncation() - 1).
GradedSeries series_mul(const PolarSeries& a, const GradedSeries& b);

/// Multiplicative inverse; throws std::domain_error when q_0 = 0.
GradedSeries series_reciprocal(const GradedSeries& a);

/// exp(u) for u with zero constant term.
GradedSeries series_exp(const GradedSeries& u);

/// log(1 + u) for u with zero constant term.
GradedSeries series_log1p(const GradedSeries& u);

/// tanh(pi z / 2) through z^T, from the zeta(2n) expansion.
GradedSeries series_tanh_half(int T);

/// cot(pi z / 2) = 2/(pi z) + ..., regular part through z^T.
PolarSeries series_cot_half(int T);

/// tanh(pi z/2) * cot(pi z/2) through z^T.
GradedSeries series_tanh_cot(int T);

/// sin(pi z)/(pi z) and sinh(pi z)/(pi z) through z^T.
GradedSeries series_sin_norm(int T);
GradedSeries series_sinh_norm(int T);

/// pi z / sin(pi z) = sum zeta*({2}^d) z^{2d}, through z^T.
GradedSeries series_zeta_star_2(int T);

/// prod (1 - z^4/k^4)^{-1} = sum zeta*({4}^d) z^{4d}, through z^T.
GradedSeries series_zeta_star_4(int T);

/// zeta*({4}^d) read off series_zeta_star_4(T); requires 4d <= T.
PiValue zeta_star_4_series(int d, int T);

}  // namespace mzstar
