#include "mzstar/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mzstar/bernoulli.hpp"
#include "mzstar/combinatorics.hpp"
#include "mzstar/errors.hpp"

namespace mzstar {

namespace {

void require_truncation(int T) {
  if (T < 0) throw std::invalid_argument("series: negative truncation order");
}

void require_no_constant(const GradedSeries& u, const char* what) {
  if (!u[0].is_zero()) throw std::domain_error(std::string(what) + ": constant term must be zero");
}

}  // namespace

GradedSeries::GradedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("GradedSeries: need at least the constant term");
}

GradedSeries GradedSeries::zero(int truncation) {
  require_truncation(truncation);
  return GradedSeries(std::vector<Rational>(static_cast<std::size_t>(truncation) + 1));
}

GradedSeries GradedSeries::one(int truncation) {
  auto s = zero(truncation);
  s.coeffs_[0] = 1;
  return s;
}

const Rational& GradedSeries::operator[](int n) const {
  if (n < 0 || n > truncation()) {
    throw TruncationError("GradedSeries: coefficient z^" + std::to_string(n) + " beyond truncation " +
                          std::to_string(truncation()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

Rational& GradedSeries::mutable_at(int n) {
  if (n < 0 || n > truncation()) {
    throw TruncationError("GradedSeries: coefficient z^" + std::to_string(n) + " beyond truncation " +
                          std::to_string(truncation()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

GradedSeries GradedSeries::truncated(int t) const {
  if (t > truncation()) throw TruncationError("GradedSeries: cannot extend truncation");
  require_truncation(t);
  return GradedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + t + 1));
}

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) {
  const int T = std::min(a.truncation(), b.truncation());
  auto r = GradedSeries::zero(T);
  for (int n = 0; n <= T; ++n) r.mutable_at(n) = a[n] + b[n];
  return r;
}

GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b) {
  const int T = std::min(a.truncation(), b.truncation());
  auto r = GradedSeries::zero(T);
  for (int n = 0; n <= T; ++n) r.mutable_at(n) = a[n] - b[n];
  return r;
}

GradedSeries series_scale(const GradedSeries& a, const Rational& c) {
  auto r = a;
  for (int n = 0; n <= r.truncation(); ++n) r.mutable_at(n) *= c;
  return r;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  const int T = std::min(a.truncation(), b.truncation());
  auto r = GradedSeries::zero(T);
  for (int i = 0; i <= T; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= T; ++j) {
      if (b[j].is_zero()) continue;
      r.mutable_at(i + j) += a[i] * b[j];
    }
  }
  return r;
}

GradedSeries series_mul(const PolarSeries& a, const GradedSeries& b) {
  require_no_constant(b, "series_mul(polar)");
  const int T = std::min(a.regular.truncation(), b.truncation() - 1);
  if (T < 0) throw TruncationError("series_mul(polar): operand truncation too small");
  auto r = series_mul(a.regular.truncated(T), b.truncated(T));
  for (int n = 0; n <= T; ++n) r.mutable_at(n) += a.pole * b[n + 1];
  return r;
}

GradedSeries series_reciprocal(const GradedSeries& a) {
  if (a[0].is_zero()) throw std::domain_error("series_reciprocal: zero constant term");
  const int T = a.truncation();
  const Rational inv0 = a[0].inverse();
  auto r = GradedSeries::zero(T);
  r.mutable_at(0) = inv0;
  for (int n = 1; n <= T; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || r[n - k].is_zero()) continue;
      acc += a[k] * r[n - k];
    }
    r.mutable_at(n) = -acc * inv0;
  }
  return r;
}

GradedSeries series_exp(const GradedSeries& u) {
  require_no_constant(u, "series_exp");
  const int T = u.truncation();
  auto f = GradedSeries::one(T);
  // n f_n = sum_{k=1}^{n} k u_k f_{n-k}
  for (int n = 1; n <= T; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) {
      if (u[k].is_zero() || f[n - k].is_zero()) continue;
      acc += Rational(k) * u[k] * f[n - k];
    }
    f.mutable_at(n) = acc / Rational(n);
  }
  return f;
}

GradedSeries series_log1p(const GradedSeries& u) {
  require_no_constant(u, "series_log1p");
  const int T = u.truncation();
  auto l = GradedSeries::zero(T);
  // with f = 1 + u: n l_n = n u_n - sum_{k=1}^{n-1} k l_k u_{n-k}
  for (int n = 1; n <= T; ++n) {
    Rational acc = Rational(n) * u[n];
    for (int k = 1; k < n; ++k) {
      if (l[k].is_zero() || u[n - k].is_zero()) continue;
      acc -= Rational(k) * l[k] * u[n - k];
    }
    l.mutable_at(n) = acc / Rational(n);
  }
  return l;
}

GradedSeries series_tanh_half(int T) {
  require_truncation(T);
  auto r = GradedSeries::zero(T);
  // tanh(pi z/2) = (4/(pi z)) sum_{n>=1} (-1)^{n+1} (4^n - 1) zeta(2n) z^{2n} / 4^n
  for (int n = 1; 2 * n - 1 <= T; ++n) {
    const Integer four_n = pow2(2 * static_cast<unsigned long>(n));
    Rational q = Rational(4) * Rational(four_n - 1) * zeta_even(static_cast<unsigned>(n)).coeff / Rational(four_n);
    if (n % 2 == 0) q = -q;
    r.mutable_at(2 * n - 1) = q;
  }
  return r;
}

PolarSeries series_cot_half(int T) {
  require_truncation(T);
  // cot(pi z/2) = -(4/(pi z)) sum_{n>=0} zeta(2n) z^{2n} / 4^n; n = 0 is the pole
  PolarSeries r{-Rational(4) * zeta_even(0).coeff, GradedSeries::zero(T)};
  for (int n = 1; 2 * n - 1 <= T; ++n) {
    const Integer four_n = pow2(2 * static_cast<unsigned long>(n));
    r.regular.mutable_at(2 * n - 1) = -Rational(4) * zeta_even(static_cast<unsigned>(n)).coeff / Rational(four_n);
  }
  return r;
}

GradedSeries series_tanh_cot(int T) {
  return series_mul(series_cot_half(T), series_tanh_half(T + 1));
}

GradedSeries series_sin_norm(int T) {
  require_truncation(T);
  auto r = GradedSeries::zero(T);
  for (int n = 0; 2 * n <= T; ++n) {
    Rational q(Integer(1), factorial(static_cast<std::size_t>(2 * n + 1)));
    r.mutable_at(2 * n) = (n % 2 == 0) ? q : -q;
  }
  return r;
}

GradedSeries series_sinh_norm(int T) {
  require_truncation(T);
  auto r = GradedSeries::zero(T);
  for (int n = 0; 2 * n <= T; ++n) r.mutable_at(2 * n) = Rational(Integer(1), factorial(static_cast<std::size_t>(2 * n + 1)));
  return r;
}

GradedSeries series_zeta_star_2(int T) { return series_reciprocal(series_sin_norm(T)); }

GradedSeries series_zeta_star_4(int T) {
  return series_reciprocal(series_mul(series_sin_norm(T), series_sinh_norm(T)));
}

PiValue zeta_star_4_series(int d, int T) {
  if (d < 0) throw DomainError("zeta_star_4_series: d must be non-negative");
  if (4 * d > T) {
    throw TruncationError("zeta_star_4_series: need truncation >= " + std::to_string(4 * d) + ", got " +
                          std::to_string(T));
  }
  return series_zeta_star_4(T).term(4 * d);
}

}  // namespace mzstar
