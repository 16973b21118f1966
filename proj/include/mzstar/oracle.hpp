#pragma once

#include <optional>

#include "mzstar/big_float.hpp"
#include "mzstar/index.hpp"

namespace mzstar {

struct NumericConfig {
  long precision_bits = 192;
  long truncation_K = 10000;
  /// When set, evaluation fails if the tail estimate exceeds it.
  std::optional<double> max_tail;
};

/// Precision from MZSTAR_PREC_BITS if set and valid, else 192.
long default_precision_bits();

struct NumericResult {
  BigFloat value;
  /// Heuristic truncation error, not a certified bound:
  ///   |t_1(K)| * K / (s_1 - 1) when the outer entry is not alternating,
  ///   |t_1(K)|                  when it is,
  /// where t_1(K) is the last outer term including its inner sum.
  BigFloat tail_estimate;
};

/// Truncated nested sum over K >= k_1 (>= or >) k_2 ... k_r >= 1 of
/// prod eps_j^{k_j} / k_j^{|s_j|}. One pass over k carries the r partial
/// inner sums, so the cost is O(r K).
/// Throws NumericPrecondition for an empty or divergent index, an invalid
/// config, or a tail estimate above cfg.max_tail.
NumericResult mzsv_num(const Index& ix, bool star, const NumericConfig& cfg);

/// A(m, n, r): sum over compositions s_1 + ... + s_r = n of the (non-star)
/// alternating sum with entries m s_j and signs (-1)^{s_j}. Tail estimates
/// add up. Requires m >= 2, n >= r >= 1.
NumericResult A_num(int m, int n, int r, const NumericConfig& cfg);

BigFloat pi_num(const NumericConfig& cfg);

/// q * pi^p at the given precision.
BigFloat pi_value_num(const Rational& q, unsigned pi_power, long precision_bits);

}  // namespace mzstar
