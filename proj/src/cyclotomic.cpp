#include "mzstar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "mzstar/bernoulli.hpp"
#include "mzstar/combinatorics.hpp"
#include "mzstar/errors.hpp"

namespace mzstar {

namespace {

// Exact quotient of a by the monic polynomial b (remainder must vanish).
IntPolynomial divide_exact(IntPolynomial a, const IntPolynomial& b) {
  const std::size_t db = b.size() - 1;
  IntPolynomial q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic_poly: inexact division");
  }
  return q;
}

IntPolynomial compute_cyclotomic(int N) {
  IntPolynomial p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d == 0) p = divide_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

std::size_t degree(int N) { return cyclotomic_poly(N).size() - 1; }

}  // namespace

const IntPolynomial& cyclotomic_poly(int N) {
  if (N < 1) throw DomainError("cyclotomic_poly: N must be positive");
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<const IntPolynomial>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(N);
  if (it == cache.end()) {
    it = cache.emplace(N, std::make_unique<const IntPolynomial>(compute_cyclotomic(N))).first;
  }
  return *it->second;
}

CycloElement::CycloElement(int N) : N_(N), coeffs_(degree(N)) {}

CycloElement::CycloElement(int N, const Rational& constant) : CycloElement(N) { coeffs_[0] = constant; }

CycloElement CycloElement::from_polynomial(int N, std::vector<Rational> coeffs) {
  const IntPolynomial& phi = cyclotomic_poly(N);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    if (coeffs[i].is_zero()) continue;
    const Rational c = coeffs[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) coeffs[i - deg + j] -= c * Rational(phi[j]);
    }
    coeffs[i] = Rational();
  }
  coeffs.resize(deg);
  CycloElement e(N);
  e.coeffs_ = std::move(coeffs);
  return e;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool CycloElement::is_zero() const { return is_rational() && coeffs_[0].is_zero(); }

Rational CycloElement::to_rational() const {
  if (!is_rational()) {
    throw RationalityViolation("CycloElement: element of Q(zeta_" + std::to_string(N_) +
                               ") has nonzero irrational part");
  }
  return coeffs_[0];
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (rhs.N_ != N_) throw std::invalid_argument("CycloElement: field mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
  if (rhs.N_ != N_) throw std::invalid_argument("CycloElement: field mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  if (a.N_ != b.N_) throw std::invalid_argument("CycloElement: field mismatch");
  const std::size_t n = a.coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloElement::from_polynomial(a.N_, std::move(prod));
}

CycloElement cyclo_root_pow(int N, long e) {
  if (N < 1) throw DomainError("cyclo_root_pow: N must be positive");
  long r = e % N;
  if (r < 0) r += N;
  std::vector<Rational> mono(static_cast<std::size_t>(r) + 1);
  mono[static_cast<std::size_t>(r)] = 1;
  return CycloElement::from_polynomial(N, std::move(mono));
}

namespace {

// 4^{m+1} * sum over n_0 + ... + n_m = total of
//   zeta^{2 sum k n_k} prod_k F(n_k),
//   F(n) = sum_{l=0}^{n} (4^{l+1}-1) B_{2l+2}/(2l+2)! B_{2n-2l}/(2n-2l)! zeta^l,
// with zeta = exp(pi i/(m+1)) a primitive 2(m+1)-th root of unity.
Rational t7_sum(int m, int total) {
  const int N = 2 * (m + 1);
  const std::size_t max_b = 2 * static_cast<std::size_t>(total) + 2;
  const auto table = bernoulli_table(max_b);
  const auto facts = factorial_table(max_b);
  std::vector<Rational> b(max_b + 1);
  for (std::size_t j = 0; j <= max_b; j += 2) b[j] = (*table)[j] / Rational((*facts)[j]);

  std::vector<CycloElement> F;
  F.reserve(static_cast<std::size_t>(total) + 1);
  for (int n = 0; n <= total; ++n) {
    std::vector<Rational> poly(static_cast<std::size_t>(N));
    for (int l = 0; l <= n; ++l) {
      const Rational t = Rational(pow2(2 * static_cast<unsigned long>(l) + 2) - 1) * b[2 * l + 2] * b[2 * (n - l)];
      poly[static_cast<std::size_t>(l % N)] += t;
    }
    F.push_back(CycloElement::from_polynomial(N, std::move(poly)));
  }

  // dp[s]: partial sum over n_0 .. n_k with n_0 + ... + n_k = s
  std::vector<CycloElement> dp = F;
  for (int k = 1; k <= m; ++k) {
    std::vector<CycloElement> G;
    G.reserve(F.size());
    for (int t = 0; t <= total; ++t) G.push_back(F[t] * cyclo_root_pow(N, 2L * k * t));
    const int lo = (k == m) ? total : 0;
    std::vector<CycloElement> next(static_cast<std::size_t>(total) + 1, CycloElement(N));
    for (int s = lo; s <= total; ++s) {
      for (int t = 0; t <= s; ++t) {
        if (dp[s - t].is_zero() || G[t].is_zero()) continue;
        next[s] += dp[s - t] * G[t];
      }
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(total)].to_rational() * Rational(pow2(2 * static_cast<unsigned long>(m) + 2));
}

void require_t7_args(int d, int m, const char* fn) {
  if (d < 0) throw DomainError(std::string(fn) + ": d must be non-negative");
  if (m < 0) throw DomainError(std::string(fn) + ": m must be non-negative");
}

}  // namespace

PiValue t7_plain(int d, int m) {
  require_t7_args(d, m, "t7_plain");
  if (d == 0) return PiValue::one();
  return PiValue(t7_sum(m, 2 * (m + 1) * d), static_cast<unsigned>(4 * d * (m + 1)));
}

PiValue t7_tail(int d, int m) {
  require_t7_args(d, m, "t7_tail");
  Rational c = t7_sum(m, (m + 1) * (2 * d + 1));
  if (m % 2 != 0) c = -c;
  return PiValue(std::move(c), static_cast<unsigned>((4 * d + 2) * (m + 1)));
}

}  // namespace mzstar
