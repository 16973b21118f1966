#include "mzstar/bernoulli.hpp"

#include <stdexcept>
#include <string>

#include "mzstar/combinatorics.hpp"
#include "mzstar/detail/snapshot_cache.hpp"

namespace mzstar {

namespace {

// Tangent numbers T_1 .. T_n (index 0 unused), O(n^2) word-by-bignum steps.
std::vector<Integer> tangent_numbers(std::size_t n) {
  std::vector<Integer> t(n + 1);
  if (n == 0) return t;
  t[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = k; j <= n; ++j) {
      mpz_mul_ui(t[j].get_mpz_t(), t[j].get_mpz_t(), j - k + 2);
      mpz_addmul_ui(t[j].get_mpz_t(), t[j - 1].get_mpz_t(), j - k);
    }
  }
  return t;
}

}  // namespace

BernoulliTable::BernoulliTable(std::size_t size)
    : size_(std::max<std::size_t>(size, 2)), b1_(Integer(-1), Integer(2)), zero_(0) {
  const std::size_t half = (size_ - 1) / 2;
  const auto tangent = tangent_numbers(half);
  even_.reserve(half + 1);
  even_.emplace_back(1);
  for (std::size_t k = 1; k <= half; ++k) {
    const Integer four_k = pow2(2 * k);
    Integer num = tangent[k] * static_cast<unsigned long>(2 * k);
    if (k % 2 == 0) num = -num;
    even_.emplace_back(num, four_k * (four_k - 1));
  }
}

const Rational& BernoulliTable::operator[](std::size_t k) const {
  if (k >= size_) throw std::out_of_range("BernoulliTable: B_" + std::to_string(k) + " not tabulated");
  if (k == 1) return b1_;
  if (k % 2 == 1) return zero_;
  return even_[k / 2];
}

std::shared_ptr<const BernoulliTable> bernoulli_table(std::size_t max_index) {
  static detail::SnapshotCache<BernoulliTable> cache;
  return cache.at_least(max_index + 1);
}

Rational bernoulli(std::size_t k) { return (*bernoulli_table(k))[k]; }

PiValue zeta_even(unsigned k) {
  const auto table = bernoulli_table(2 * k);
  Rational c = (*table)[2 * k] * Rational(pow2(2 * k)) / Rational(factorial(2 * k) * 2);
  if (k % 2 == 0) c = -c;
  return PiValue(std::move(c), 2 * k);
}

Rational beta_coeff(unsigned r) {
  const auto table = bernoulli_table(2 * r);
  Rational c = Rational(pow2(2 * r) - 2) * (*table)[2 * r] / Rational(factorial(2 * r));
  // (-1)^{r-1}
  if (r % 2 == 0) c = -c;
  return c;
}

}  // namespace mzstar
