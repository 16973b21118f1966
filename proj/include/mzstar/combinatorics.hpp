#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mzstar/rational.hpp"

namespace mzstar {

/// Immutable table of n! for n < size().
class FactorialTable {
 public:
  explicit FactorialTable(std::size_t size);

  std::size_t size() const { return values_.size(); }
  const Integer& operator[](std::size_t n) const;

 private:
  std::vector<Integer> values_;
};

/// Shared memoized table with at least `max_n + 1` entries.
std::shared_ptr<const FactorialTable> factorial_table(std::size_t max_n);

Integer factorial(std::size_t n);

/// C(n, k); zero when k < 0 or k > n. n must be non-negative.
Integer binomial(long n, long k);

}  // namespace mzstar
