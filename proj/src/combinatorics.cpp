#include "mzstar/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "mzstar/detail/snapshot_cache.hpp"

namespace mzstar {

FactorialTable::FactorialTable(std::size_t size) : values_(std::max<std::size_t>(size, 1)) {
  values_[0] = 1;
  for (std::size_t n = 1; n < values_.size(); ++n) values_[n] = values_[n - 1] * static_cast<unsigned long>(n);
}

const Integer& FactorialTable::operator[](std::size_t n) const {
  if (n >= values_.size()) throw std::out_of_range("FactorialTable: " + std::to_string(n) + " not tabulated");
  return values_[n];
}

std::shared_ptr<const FactorialTable> factorial_table(std::size_t max_n) {
  static detail::SnapshotCache<FactorialTable> cache;
  return cache.at_least(max_n + 1);
}

Integer factorial(std::size_t n) {
  // past the memo bound: computed directly, not cached
  if (n > 2048) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }
  return (*factorial_table(n))[n];
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace mzstar
