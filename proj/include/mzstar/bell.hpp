#pragma once

#include <span>
#include <vector>

#include "mzstar/combinatorics.hpp"
#include "mzstar/pi_value.hpp"
#include "mzstar/rational.hpp"
#include "mzstar/series.hpp"

namespace mzstar {

/// One partition of n as multiplicities: multiplicities[j-1] = number of
/// parts equal to parts[j-1].
struct PartitionTerm {
  std::vector<int> parts;           // distinct allowed part sizes, ascending
  std::vector<int> multiplicities;  // same length as parts

  int total() const;
};

/// All partitions of n using only the given part sizes (ascending, positive).
/// Enumerated by recursive descent on the largest part: terms are ordered by
/// the multiplicity of the largest part (ascending), then recursively by the
/// remaining parts. The order is deterministic.
std::vector<PartitionTerm> enumerate_partitions(int n, std::span<const int> parts);

/// Partitions of n into odd parts <= max_part.
std::vector<PartitionTerm> odd_partitions(int n, int max_part);

namespace detail {
inline Rational unit(const Rational&) { return Rational(1); }
inline PiValue unit(const PiValue&) { return PiValue::one(); }
}  // namespace detail

/// Modified Bell polynomial
///   P_n(x_1..x_n) = sum over k_1 + 2k_2 + ... + n k_n = n of
///                   prod_j (x_j / j)^{k_j} / k_j!,
/// the z^n coefficient of exp(sum_k x_k z^k / k). P_0 = 1.
/// Works for Rational and for PiValue inputs (x_k must then carry
/// pi^{k w} for a fixed w so that every term has the same pi power).
template <typename Scalar>
Scalar modified_bell(int n, std::span<const Scalar> xs) {
  if (n < 0) throw std::invalid_argument("modified_bell: negative n");
  if (static_cast<int>(xs.size()) < n) throw std::invalid_argument("modified_bell: need at least n inputs");
  if (n == 0) return detail::unit(Scalar{});
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) parts[static_cast<std::size_t>(j - 1)] = j;

  bool first = true;
  Scalar total{};
  for (const auto& p : enumerate_partitions(n, parts)) {
    Scalar term = detail::unit(Scalar{});
    Integer denom = 1;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      const int k = p.multiplicities[i];
      if (k == 0) continue;
      const int j = p.parts[i];
      for (int e = 0; e < k; ++e) term = term * xs[static_cast<std::size_t>(j - 1)];
      denom *= ipow(j, static_cast<unsigned long>(k)) * factorial(static_cast<std::size_t>(k));
    }
    term = term / Rational(denom);
    if (first) {
      total = term;
      first = false;
    } else {
      total += term;
    }
  }
  return total;
}

/// zeta(s-bar) = sum (-1)^k / k^s = (2^{1-s} - 1) zeta(s), s even >= 2.
PiValue zeta_bar_even(int s);

/// zeta*({{2}^{m-1}, 3, {2}^{m-1}, 1}^d) as a sum over partitions of 2d into
/// odd parts. d, m >= 1.
PiValue bell_plain(int d, int m);

/// zeta*({{2}^{m-1}, 3, {2}^{m-1}, 1}^d, {2}^m), partitions of 2d+1 into odd
/// parts. d, m >= 1.
PiValue bell_tail(int d, int m);

/// Inputs x_k = (1 - (-1)^k) zeta(2mk; (-1)^k) for k = 1..count: 2 zeta(bar(2mk))
/// at odd k, 0 at even k. x_k carries pi^{2mk}.
std::vector<PiValue> bell_inputs(int m, int count);

/// exp(sum_k x_k w^k / k) with w = z^{2m}, as a graded series in z through
/// z^T. Its z^{2mn} coefficient is P_n(x_1..x_n).
GradedSeries bell_generating_series(int m, int T);

/// Explicit closed forms for d = 1 and d = 2 (m >= 1). corollary_d1_tail
/// equals (-1)^(m+1) * bell_tail(1, m).
PiValue corollary_d1(int m);
PiValue corollary_d1_tail(int m);
PiValue corollary_d2(int m);

}  // namespace mzstar
