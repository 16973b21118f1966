#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mzstar/pi_value.hpp"
#include "mzstar/rational.hpp"

namespace mzstar {

/// Immutable table of Bernoulli numbers B_0 .. B_{size()-1}, with B_1 = -1/2.
///
/// Even entries are generated from the tangent numbers T_k (tan x = sum T_k
/// x^{2k-1}/(2k-1)!) by the integer recurrence of Brent and Harvey, then
///   B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
/// Odd entries past B_1 are zero and are not stored.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t size);

  std::size_t size() const { return size_; }

  /// B_k by reference; the reference lives as long as the table.
  const Rational& operator[](std::size_t k) const;

 private:
  std::size_t size_;
  std::vector<Rational> even_;  // even_[j] = B_{2j}
  Rational b1_;
  Rational zero_;
};

/// Shared memoized table covering at least B_0 .. B_{max_index}. Safe to call
/// concurrently; the returned snapshot never changes.
std::shared_ptr<const BernoulliTable> bernoulli_table(std::size_t max_index);

/// B_k (memoized).
Rational bernoulli(std::size_t k);

/// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), with zeta(0) = -1/2.
PiValue zeta_even(unsigned k);

/// beta_r = (2^{2r} - 2) (-1)^{r-1} B_{2r} / (2r)!, evaluated literally
/// (so beta_0 = 1). Equals zeta*({2}^r) / pi^{2r}.
Rational beta_coeff(unsigned r);

}  // namespace mzstar
