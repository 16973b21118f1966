#include "mzstar/oracle.hpp"

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "mzstar/errors.hpp"

namespace mzstar {

long default_precision_bits() {
  if (const char* env = std::getenv("MZSTAR_PREC_BITS")) {
    try {
      std::size_t used = 0;
      const long bits = std::stol(env, &used);
      if (used == std::string(env).size() && bits >= 64) return bits;
    } catch (const std::exception&) {
    }
  }
  return 192;
}

namespace {

void check_config(const NumericConfig& cfg) {
  if (cfg.precision_bits < 64) throw NumericPrecondition("precision_bits must be >= 64");
  if (cfg.truncation_K < 10) throw NumericPrecondition("truncation_K must be >= 10");
}

void check_tail(const NumericResult& r, const NumericConfig& cfg) {
  if (cfg.max_tail && r.tail_estimate.to_double() > *cfg.max_tail) {
    throw NumericPrecondition("K = " + std::to_string(cfg.truncation_K) + " leaves tail estimate " +
                              r.tail_estimate.to_string(3) + " above the requested " + std::to_string(*cfg.max_tail));
  }
}

}  // namespace

NumericResult mzsv_num(const Index& ix, bool star, const NumericConfig& cfg) {
  check_config(cfg);
  if (ix.empty()) throw NumericPrecondition("mzsv_num: empty index");
  if (!ix.admissible()) throw NumericPrecondition("mzsv_num: divergent index (leading entry 1)");

  const long prec = cfg.precision_bits;
  const std::size_t r = ix.depth();
  std::vector<unsigned long> power(r);
  std::vector<bool> alternating(r);
  for (std::size_t j = 0; j < r; ++j) {
    const int s = ix.entries[j];
    power[j] = static_cast<unsigned long>(s < 0 ? -s : s);
    alternating[j] = s < 0;
  }

  // acc[j]: sum over k_j <= k (k_j < k for strict) of the terms j..r-1.
  // acc[r] is the constant 1 closing the recursion.
  std::vector<BigFloat> acc(r + 1, BigFloat(prec));
  acc[r] = BigFloat(1, prec);
  BigFloat t(prec), kf(prec), last_outer(prec);

  auto term = [&](std::size_t j, long k, const BigFloat& inner) {
    mpfr_set_si(kf.raw(), k, MPFR_RNDN);
    mpfr_pow_ui(t.raw(), kf.raw(), power[j], MPFR_RNDN);
    mpfr_div(t.raw(), inner.raw(), t.raw(), MPFR_RNDN);
    if (alternating[j] && k % 2 != 0) mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
    return t;
  };

  for (long k = 1; k <= cfg.truncation_K; ++k) {
    if (star) {
      // inner first, so level j sees level j+1 with k included
      for (std::size_t j = r; j-- > 0;) {
        term(j, k, acc[j + 1]);
        if (j == 0) last_outer = t;
        acc[j] += t;
      }
    } else {
      // outer first, so level j sees level j+1 summed over k' < k
      for (std::size_t j = 0; j < r; ++j) {
        term(j, k, acc[j + 1]);
        if (j == 0) last_outer = t;
        acc[j] += t;
      }
    }
  }

  NumericResult result{acc[0], last_outer.abs()};
  if (!alternating[0]) {
    result.tail_estimate *= BigFloat(cfg.truncation_K, prec);
    result.tail_estimate /= BigFloat(static_cast<long>(power[0]) - 1, prec);
  }
  check_tail(result, cfg);
  return result;
}

NumericResult A_num(int m, int n, int r, const NumericConfig& cfg) {
  check_config(cfg);
  if (m < 2) throw NumericPrecondition("A_num: m must be >= 2");
  if (r < 1 || n < r) throw NumericPrecondition("A_num: need n >= r >= 1");

  NumericConfig inner = cfg;
  inner.max_tail.reset();
  NumericResult total{BigFloat(cfg.precision_bits), BigFloat(cfg.precision_bits)};

  std::vector<int> parts;
  std::function<void(int)> compose = [&](int remaining) {
    const int slots = r - static_cast<int>(parts.size());
    if (slots == 0) {
      Index ix;
      for (int s : parts) ix.entries.push_back(s % 2 != 0 ? -m * s : m * s);
      const NumericResult one = mzsv_num(ix, false, inner);
      total.value += one.value;
      total.tail_estimate += one.tail_estimate;
      return;
    }
    for (int s = 1; s <= remaining - (slots - 1); ++s) {
      if (slots == 1 && s != remaining) continue;
      parts.push_back(s);
      compose(remaining - s);
      parts.pop_back();
    }
  };
  compose(n);
  check_tail(total, cfg);
  return total;
}

BigFloat pi_num(const NumericConfig& cfg) {
  check_config(cfg);
  return BigFloat::pi(cfg.precision_bits);
}

BigFloat pi_value_num(const Rational& q, unsigned pi_power, long precision_bits) {
  return BigFloat::from_rational(q, precision_bits) * BigFloat::pi(precision_bits).pow(pi_power);
}

}  // namespace mzstar
