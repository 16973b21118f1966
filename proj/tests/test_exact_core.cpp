#include <doctest.h>

#include <thread>
#include <vector>

#include "mzstar/bernoulli.hpp"
#include "mzstar/combinatorics.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/mzsv_eval.hpp"
#include "mzstar/pi_value.hpp"
#include "mzstar/rational.hpp"

using namespace mzstar;

namespace {

// B_0 .. B_n from sum_{j=0}^{k} C(k+1, j) B_j = 0 (k >= 1). Independent of
// the tangent-number generator used by the library.
std::vector<Rational> bernoulli_by_recurrence(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s;
    for (int j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(k)] = -s / Rational(k + 1);
  }
  return b;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, -5).to_string() == "0");
  CHECK(Rational(0, -5).denominator() == 1);
  CHECK(Rational(Integer(10), Integer(5)).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational parse and render") {
  CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
  CHECK(Rational::parse("14/-7") == Rational(-2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("rational ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(-5, 7).sign() == -1);
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
}

TEST_CASE("rational arithmetic on random 256-bit operands") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    Integer a = rng.get_z_bits(256), b = rng.get_z_bits(256) + 1;
    Integer c = rng.get_z_bits(256), e = rng.get_z_bits(256) + 1;
    if (trial % 2 == 0) a = -a;
    if (trial % 3 == 0) c = -c;
    const Rational x(a, b), y(c, e);

    // cross-multiplication forms, reduced independently by the constructor
    CHECK(x + y == Rational(a * e + c * b, b * e));
    CHECK(x - y == Rational(a * e - c * b, b * e));
    CHECK(x * y == Rational(a * c, b * e));
    if (c != 0) CHECK(x / y == Rational(a * e, b * c));

    // lowest terms, positive denominator
    const Rational s = x * y + x;
    Integer g;
    mpz_gcd(g.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(s.denominator() > 0);

    CHECK((x + y) - y == x);
    CHECK(x * (y + Rational(1)) == x * y + x);
  }
}

TEST_CASE("pi values") {
  const PiValue a(Rational(1, 6), 2);
  const PiValue b(Rational(1, 3), 2);
  CHECK(a + b == PiValue(Rational(1, 2), 2));
  CHECK(a * b == PiValue(Rational(1, 18), 4));
  CHECK_THROWS_AS(a + PiValue(Rational(1), 4), PiPowerMismatch);
  CHECK_THROWS_AS(a - PiValue(Rational(1), 0), PiPowerMismatch);
  CHECK(a.to_string() == "1/6*pi^2");
  CHECK(PiValue::one().to_string() == "1");
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(3000) == factorial(2999) * 3000);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  for (long n = 1; n < 40; ++n) {
    for (long k = 1; k <= n; ++k) {
      // absorption: k C(n,k) = n C(n-1,k-1)
      CHECK(binomial(n, k) * k == binomial(n - 1, k - 1) * n);
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("bernoulli numbers agree with the defining recurrence") {
  const auto ref = bernoulli_by_recurrence(120);
  const auto table = bernoulli_table(120);
  for (std::size_t k = 0; k <= 120; ++k) CHECK_MESSAGE((*table)[k] == ref[k], "k = " << k);
}

TEST_CASE("bernoulli known values") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(3) == Rational(0));
}

TEST_CASE("von Staudt-Clausen and vanishing odd values, k <= 100") {
  const auto table = bernoulli_table(201);
  for (long k = 1; k <= 100; ++k) {
    Integer expected = 1;
    Rational frac;
    for (long p = 2; p <= 2 * k + 1; ++p) {
      if (is_prime(p) && (2 * k) % (p - 1) == 0) {
        expected *= p;
        frac += Rational(1, p);
      }
    }
    const Rational& b = (*table)[static_cast<std::size_t>(2 * k)];
    CHECK(b.denominator() == expected);
    CHECK((b + frac).is_integer());
    CHECK((*table)[static_cast<std::size_t>(2 * k + 1)].is_zero());
  }
}

TEST_CASE("bernoulli table snapshots grow and are shared safely") {
  const auto small = bernoulli_table(10);
  CHECK(small->size() >= 11);
  std::vector<std::thread> pool;
  std::vector<Rational> seen(4);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([t, &seen] { seen[static_cast<std::size_t>(t)] = (*bernoulli_table(100 + 40 * t))[100]; });
  }
  for (auto& th : pool) th.join();
  for (const auto& v : seen) CHECK(v == seen[0]);
  CHECK((*small)[10] == Rational(5, 66));
  CHECK_THROWS_AS((*small)[small->size()], std::out_of_range);
}

TEST_CASE("even zeta values") {
  CHECK(zeta_even(1) == PiValue(Rational(1, 6), 2));
  CHECK(zeta_even(2) == PiValue(Rational(1, 90), 4));
  CHECK(zeta_even(3) == PiValue(Rational(1, 945), 6));
  CHECK(zeta_even(0) == PiValue(Rational(-1, 2), 0));
}

TEST_CASE("beta coefficients") {
  CHECK(beta_coeff(0) == Rational(1));
  CHECK(beta_coeff(1) == Rational(1, 6));
  CHECK(beta_coeff(2) == Rational(7, 360));
  for (unsigned r = 0; r <= 10; ++r) CHECK(PiValue(beta_coeff(r), 2 * r) == zeta_star_2_pow(static_cast<int>(r)));
}
