#include <doctest.h>

#include "mzstar/combinatorics.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/mzsv_eval.hpp"
#include "mzstar/oracle.hpp"
#include "mzstar/series.hpp"

using namespace mzstar;

namespace {

// |exact - oracle| <= slack * tail estimate. Star indices ending in 1 keep
// inner sums growing like log k at the cutoff, which the heuristic tail does
// not see; those comparisons use slack 2.
bool matches_oracle(const PiValue& exact, const char* index, bool star, long K, double slack = 1.0) {
  NumericConfig cfg;
  cfg.truncation_K = K;
  const NumericResult r = mzsv_num(parse_index(index), star, cfg);
  const BigFloat diff = (r.value - pi_value_num(exact.coeff, exact.pi_power, cfg.precision_bits)).abs();
  return diff <= r.tail_estimate * BigFloat(static_cast<long>(slack * 1000), 64) / BigFloat(1000, 64);
}

}  // namespace

TEST_CASE("elementary families") {
  CHECK(zeta_2_pow(0) == PiValue::one());
  CHECK(zeta_2_pow(1) == PiValue(Rational(1, 6), 2));
  CHECK(zeta_2_pow(2) == PiValue(Rational(1, 120), 4));
  CHECK(zeta_31_pow(1) == PiValue(Rational(1, 360), 4));
  CHECK(zeta_31_pow(2) == PiValue(Rational(Integer(2), factorial(10)), 8));
  CHECK(zeta_star_2_pow(1) == PiValue(Rational(1, 6), 2));
  CHECK(zeta_star_2_pow(2) == PiValue(Rational(7, 360), 4));
}

TEST_CASE("elementary families against the oracle") {
  CHECK(matches_oracle(zeta_2_pow(2), "2,2", false, 20000));
  CHECK(matches_oracle(zeta_star_2_pow(3), "{2}^3", true, 20000, 2.0));
  CHECK(matches_oracle(zeta_31_pow(1), "3,1", false, 20000, 2.0));
}

TEST_CASE("zeta*(3,1) = pi^4/72") {
  CHECK(zeta_star_31_pow(1) == PiValue(Rational(1, 72), 4));
  CHECK(muneta_zeta_star_31(1) == PiValue(Rational(1, 72), 4));
  // stuffle: zeta*(3,1) = zeta(3,1) + zeta(4)
  CHECK(zeta_star_31_pow(1) == zeta_31_pow(1) + PiValue(Rational(1, 90), 4));
  CHECK(matches_oracle(zeta_star_31_pow(1), "3,1", true, 20000, 2.0));
}

TEST_CASE("T4 agrees with Muneta") {
  for (int d = 0; d <= 40; ++d) CHECK_MESSAGE(zeta_star_31_pow(d) == muneta_zeta_star_31(d), "d = " << d);
}

TEST_CASE("tail family against the oracle") {
  CHECK(zeta_star_31_pow_2(0) == zeta_star_2_pow(1));
  CHECK(matches_oracle(zeta_star_31_pow_2(1), "3,1,2", true, 20000, 2.0));
  CHECK(matches_oracle(zeta_star_31_pow(2), "{3,1}^2", true, 20000, 2.0));
}

TEST_CASE("Muneta stepping stone with series zeta*({4}^j)") {
  const GradedSeries z4 = series_zeta_star_4(32);
  for (int d = 0; d <= 8; ++d) {
    PiValue sum = PiValue::zero(static_cast<unsigned>(4 * d));
    for (int j = 0; j <= d; ++j) sum += zeta_31_pow(j) * z4.term(4 * (d - j));
    CHECK_MESSAGE(sum == zeta_star_31_pow(d), "d = " << d);
  }
}

TEST_CASE("Bowman-Bradley sums") {
  CHECK(bowman_bradley_Z(1, 1) == PiValue(Rational(1, 5040), 6));
  for (int d = 0; d <= 6; ++d) CHECK(bowman_bradley_Z(d, 0) == zeta_31_pow(d));
  for (int n = 0; n <= 6; ++n) CHECK(bowman_bradley_Z(0, n) == zeta_2_pow(n));

  // Z(1,1) = zeta(2,3,1) + zeta(3,2,1) + zeta(3,1,2) numerically
  NumericConfig cfg;
  cfg.truncation_K = 4000;
  BigFloat sum(cfg.precision_bits), tail(cfg.precision_bits);
  for (const char* ix : {"2,3,1", "3,2,1", "3,1,2"}) {
    const NumericResult r = mzsv_num(parse_index(ix), false, cfg);
    sum += r.value;
    tail += r.tail_estimate;
  }
  const PiValue z = bowman_bradley_Z(1, 1);
  CHECK((sum - pi_value_num(z.coeff, z.pi_power, cfg.precision_bits)).abs() <= tail * BigFloat(2, 64));
}

TEST_CASE("sum formulas") {
  CHECK(zstar(1, 0) == PiValue(Rational(1, 72), 4));
  CHECK(zstar0(1, 0) == PiValue(Rational(1, 72), 4));
  CHECK(zstar1(1, 0) == PiValue::zero(4));
  for (int d = 1; d <= 4; ++d) {
    CHECK(zstar(d, 0) == zeta_star_31_pow(d));
    for (int n = 0; n <= 4; ++n) {
      CHECK(zstar(d, n) == yamamoto_Zstar(d, n));
      CHECK(zstar(d, n) == zstar0(d, n) + zstar1(d, n));
      CHECK_NOTHROW(sum_formula(d, n));
    }
  }
  // Z*(0, n) reduces to zeta*({2}^n) in the six-index sum
  for (int n = 0; n <= 5; ++n) CHECK(yamamoto_Zstar(0, n) == zeta_star_2_pow(n));
}

TEST_CASE("Z*(1,1) against the oracle") {
  // Z*(1,1) = zeta*(2,3,1) + zeta*(3,2,1) + zeta*(3,1,2)
  NumericConfig cfg;
  cfg.truncation_K = 20000;
  BigFloat sum(cfg.precision_bits), tail(cfg.precision_bits);
  for (const char* ix : {"2,3,1", "3,2,1", "3,1,2"}) {
    const NumericResult r = mzsv_num(parse_index(ix), true, cfg);
    sum += r.value;
    tail += r.tail_estimate;
  }
  const PiValue z = zstar(1, 1);
  CHECK((sum - pi_value_num(z.coeff, z.pi_power, cfg.precision_bits)).abs() <= tail * BigFloat(2, 64));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(zeta_star_31_pow(-1), DomainError);
  CHECK_THROWS_AS(muneta_zeta_star_31(-1), DomainError);
  CHECK_THROWS_AS(zstar(0, 1), DomainError);
  CHECK_THROWS_AS(zstar0(0, 1), DomainError);
  CHECK_THROWS_AS(zstar1(0, 1), DomainError);
  CHECK_THROWS_AS(zstar(1, -1), DomainError);
  CHECK_THROWS_AS(bowman_bradley_Z(-1, 0), DomainError);
}

TEST_CASE("binomial identity behind the sum formula split") {
  auto alt = [](long top, long w, long k, long n, long shift) {
    Integer s = 0;
    for (long r = 0; r <= n; ++r) {
      const Integer t = binomial(top, r) * binomial(w - k, n - shift - r);
      if (r % 2 == 0) s += t; else s -= t;
    }
    return s;
  };
  for (long d = 0; d <= 6; ++d) {
    for (long n = 0; n <= 12; ++n) {
      const long w = n + 2 * d;
      for (long k = 0; k <= w; ++k) {
        CHECK(alt(k, w, k, n, 0) - alt(k, w, k, n, 1) == alt(k + 1, w, k, n, 0));
      }
    }
  }
}
