#include "mzstar/mzsv_eval.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "mzstar/bernoulli.hpp"
#include "mzstar/combinatorics.hpp"
#include "mzstar/errors.hpp"

namespace mzstar {

namespace {

void require_nonnegative(int v, const char* name, const char* fn) {
  if (v < 0) throw DomainError(std::string(fn) + ": " + name + " must be non-negative");
}

void require_positive_d(int d, const char* fn) {
  if (d < 1) {
    throw DomainError(std::string(fn) + ": d must be a positive integer (use zeta_star_2_pow for d = 0)");
  }
}

// Product of all primes p <= bound. By von Staudt-Clausen every denominator
// of B_j, j <= bound - 1, divides it.
Integer primorial(unsigned long bound) {
  std::vector<bool> composite(bound + 1, false);
  Integer r = 1;
  for (unsigned long p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    r *= p;
    for (unsigned long q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return r;
}

// S[j] = B_{2j} * L for a common multiple L of the denominators of
// B_0, B_2, ..., B_{2 count - 2}.
struct ScaledBernoulli {
  Integer common;
  std::vector<Integer> scaled;
};

ScaledBernoulli scaled_bernoulli(std::size_t count) {
  const std::size_t max_index = count == 0 ? 0 : 2 * (count - 1);
  const auto table = bernoulli_table(max_index);
  ScaledBernoulli out{primorial(max_index + 1), {}};
  out.scaled.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Rational& b = (*table)[2 * j];
    Integer cofactor;
    mpz_divexact(cofactor.get_mpz_t(), out.common.get_mpz_t(), b.raw().get_den_mpz_t());
    out.scaled[j] = b.raw().get_num() * cofactor;
  }
  return out;
}

// x * (4^e - 1), as a shift and a subtraction.
void mul_four_pow_minus_one(Integer& x, unsigned long e) {
  Integer shifted;
  mpz_mul_2exp(shifted.get_mpz_t(), x.get_mpz_t(), 2 * e);
  x = shifted - x;
}

// sum_{k=0}^{K} (-1)^k (4^{k+1}-1) B_{2k+2}/(2k+2)! B_{2K-2k}/(2K-2k)!
//
// With M = 2K+2 and S_j = B_j L this is
//   [ sum_k (-1)^k (4^{k+1}-1) C(M, 2k+2) S_{2k+2} S_{2K-2k} ] / (M! L^2),
// so the loop runs over integers only.
Rational linear_bernoulli_sum(unsigned long K) {
  const unsigned long M = 2 * K + 2;
  const auto sb = scaled_bernoulli(K + 2);
  Integer total = 0;
  Integer binom = M * (M - 1) / 2;  // C(M, 2)
  Integer term;
  for (unsigned long k = 0; k <= K; ++k) {
    if (k > 0) {
      // C(M, a+2) = C(M, a) (M-a)(M-a-1) / ((a+1)(a+2)), a = 2k
      const unsigned long a = 2 * k;
      mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(), (M - a) * (M - a - 1));
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), (a + 1) * (a + 2));
    }
    mpz_mul(term.get_mpz_t(), sb.scaled[k + 1].get_mpz_t(), sb.scaled[K - k].get_mpz_t());
    term *= binom;
    mul_four_pow_minus_one(term, k + 1);
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return Rational(total, factorial(M) * sb.common * sb.common);
}

// b_j = B_j / j! for 0 <= j <= max_index.
std::vector<Rational> bernoulli_over_factorial(std::size_t max_index) {
  const auto table = bernoulli_table(max_index);
  const auto facts = factorial_table(max_index);
  std::vector<Rational> b(max_index + 1);
  for (std::size_t j = 0; j <= max_index; ++j) b[j] = (*table)[j] / Rational((*facts)[j]);
  return b;
}

enum class SumKind { kZero, kOne, kFull };

// Shared core of the three sum formulas:
//   4 sum_k sum_r sign (4^{k+1}-1) binomials * b_{2k+2} b_{2n+4d-2k}.
PiValue t11_sum(int d, int n, SumKind kind) {
  const long w = n + 2 * d;
  const auto b = bernoulli_over_factorial(static_cast<std::size_t>(2 * w + 2));
  Rational total;
  for (long k = 0; k <= w; ++k) {
    Integer inner = 0;
    if (kind == SumKind::kOne) {
      for (long r = 0; r <= n - 1; ++r) {
        const Integer t = binomial(k, r) * binomial(w - k, n - 1 - r);
        if (r % 2 == 0) inner += t; else inner -= t;
      }
    } else {
      const long top = kind == SumKind::kFull ? k + 1 : k;
      for (long r = 0; r <= n; ++r) {
        const Integer t = binomial(top, r) * binomial(w - k, n - r);
        if (r % 2 == 0) inner += t; else inner -= t;
      }
    }
    if (inner == 0) continue;
    long sign_exp = n + k + (kind == SumKind::kOne ? 1 : 0);
    Integer weight = (pow2(2 * static_cast<unsigned long>(k) + 2) - 1) * inner;
    if (sign_exp % 2 != 0) weight = -weight;
    total += Rational(weight) * b[static_cast<std::size_t>(2 * k + 2)] * b[static_cast<std::size_t>(2 * w - 2 * k)];
  }
  return PiValue(total * Rational(4), static_cast<unsigned>(2 * w));
}

}  // namespace

PiValue zeta_2_pow(int d) {
  require_nonnegative(d, "d", "zeta_2_pow");
  return PiValue(Rational(Integer(1), factorial(2 * static_cast<std::size_t>(d) + 1)), 2 * static_cast<unsigned>(d));
}

PiValue zeta_star_2_pow(int d) {
  require_nonnegative(d, "d", "zeta_star_2_pow");
  return PiValue(beta_coeff(static_cast<unsigned>(d)), 2 * static_cast<unsigned>(d));
}

PiValue zeta_31_pow(int d) {
  require_nonnegative(d, "d", "zeta_31_pow");
  return PiValue(Rational(Integer(2), factorial(4 * static_cast<std::size_t>(d) + 2)), 4 * static_cast<unsigned>(d));
}

PiValue zeta_star_31_pow(int d) {
  require_nonnegative(d, "d", "zeta_star_31_pow");
  return PiValue(Rational(4) * linear_bernoulli_sum(2 * static_cast<unsigned long>(d)), 4 * static_cast<unsigned>(d));
}

PiValue zeta_star_31_pow_2(int d) {
  require_nonnegative(d, "d", "zeta_star_31_pow_2");
  return PiValue(Rational(4) * linear_bernoulli_sum(2 * static_cast<unsigned long>(d) + 1),
                 4 * static_cast<unsigned>(d) + 2);
}

PiValue muneta_zeta_star_31(int d) {
  require_nonnegative(d, "d", "muneta_zeta_star_31");
  const unsigned long D = static_cast<unsigned long>(d);
  // W_n = (2^{2n} - 2) B_{2n} L for n <= 2d
  auto sb = scaled_bernoulli(2 * D + 1);
  std::vector<Integer>& w = sb.scaled;
  for (unsigned long n = 0; n <= 2 * D; ++n) w[n] *= pow2(2 * n) - 2;

  // Inner sum for N = n0 + n1 = 2(d-j), scaled by (2N)! L^2:
  //   I_N = sum (-1)^{n1} C(2N, 2 n0) W_{n0} W_{n1}.
  // N is even, so n0 and n1 share parity and the (n0, n1), (n1, n0) terms
  // coincide.
  Integer outer = 0;
  Integer inner;
  Integer binom;
  Integer term;
  for (unsigned long j = 0; j <= D; ++j) {
    const unsigned long N = 2 * (D - j);
    const unsigned long half = N / 2;
    inner = 0;
    binom = 1;  // C(2N, 0)
    for (unsigned long n0 = 0; n0 <= half; ++n0) {
      if (n0 > 0) {
        const unsigned long a = 2 * (n0 - 1);
        mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(), (2 * N - a) * (2 * N - a - 1));
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), (a + 1) * (a + 2));
      }
      mpz_mul(term.get_mpz_t(), w[n0].get_mpz_t(), w[N - n0].get_mpz_t());
      term *= binom;
      if (n0 != N - n0) term *= 2;
      if (n0 % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    // 2/(4j+2)! * I_N/((2N)! L^2) with (4j+2) + 2N = 4d+2
    outer += 2 * binomial(static_cast<long>(4 * D + 2), static_cast<long>(4 * j + 2)) * inner;
  }
  return PiValue(Rational(outer, factorial(4 * D + 2) * sb.common * sb.common), 4 * static_cast<unsigned>(d));
}

PiValue bowman_bradley_Z(int d, int n) {
  require_nonnegative(d, "d", "bowman_bradley_Z");
  require_nonnegative(n, "n", "bowman_bradley_Z");
  const Integer num = binomial(n + 2 * d, n);
  const Integer den = Integer(2 * d + 1) * factorial(static_cast<std::size_t>(2 * n + 4 * d + 1));
  return PiValue(Rational(num, den), static_cast<unsigned>(2 * n + 4 * d));
}

PiValue yamamoto_Zstar(int d, int n) {
  require_nonnegative(d, "d", "yamamoto_Zstar");
  require_nonnegative(n, "n", "yamamoto_Zstar");
  std::vector<Rational> beta(static_cast<std::size_t>(2 * d + n) + 1);
  for (std::size_t r = 0; r < beta.size(); ++r) beta[r] = beta_coeff(static_cast<unsigned>(r));

  Rational total;
  for (int m = 0; m <= d; ++m) {
    const int ku = 2 * d - 2 * m;
    for (int k = 0; k <= ku; ++k) {
      const int u = ku - k;
      for (int j = 0; j <= n; ++j) {
        const Rational outer(binomial(2 * m + j, j),
                             Integer(2 * m + 1) * factorial(static_cast<std::size_t>(4 * m + 2 * j + 1)));
        for (int l = 0; l <= n - j; ++l) {
          const int v = n - j - l;
          Rational t = outer * Rational(binomial(k + l, k) * binomial(u + v, u)) * beta[k + l] * beta[u + v];
          if ((j + k) % 2 != 0) t = -t;
          total += t;
        }
      }
    }
  }
  return PiValue(total, static_cast<unsigned>(4 * d + 2 * n));
}

PiValue zstar0(int d, int n) {
  require_positive_d(d, "zstar0");
  require_nonnegative(n, "n", "zstar0");
  return t11_sum(d, n, SumKind::kZero);
}

PiValue zstar1(int d, int n) {
  require_positive_d(d, "zstar1");
  require_nonnegative(n, "n", "zstar1");
  // empty sum over compositions of n - 1 = -1
  if (n == 0) return PiValue::zero(static_cast<unsigned>(4 * d));
  return t11_sum(d, n, SumKind::kOne);
}

PiValue zstar(int d, int n) {
  require_positive_d(d, "zstar");
  require_nonnegative(n, "n", "zstar");
  return t11_sum(d, n, SumKind::kFull);
}

SumFormulaResult sum_formula(int d, int n) {
  SumFormulaResult r{d, n, zstar(d, n), zstar0(d, n), zstar1(d, n)};
  if (r.z_star != r.z_star_0 + r.z_star_1) {
    throw std::logic_error("sum_formula: Z*(" + std::to_string(d) + "," + std::to_string(n) +
                           ") != Z*_0 + Z*_1");
  }
  return r;
}

}  // namespace mzstar
