#include "mzstar/bench.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include "mzstar/bernoulli.hpp"
#include "mzstar/combinatorics.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/mzsv_eval.hpp"

namespace mzstar {

BenchRow run_bench(const std::string& formula, int d, int reps) {
  PiValue (*fn)(int) = nullptr;
  if (formula == "t4") {
    fn = zeta_star_31_pow;
  } else if (formula == "muneta") {
    fn = muneta_zeta_star_31;
  } else {
    throw DomainError("bench: formula must be t4 or muneta, got '" + formula + "'");
  }
  if (d < 0) throw DomainError("bench: d must be non-negative");
  if (reps < 1) throw DomainError("bench: reps must be >= 1");

  const auto top = static_cast<std::size_t>(4 * d + 2);
  bernoulli_table(top);
  factorial_table(top);

  std::vector<double> seconds;
  seconds.reserve(static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const PiValue v = fn(d);
    const auto stop = std::chrono::steady_clock::now();
    if (v.pi_power != static_cast<unsigned>(4 * d)) throw std::logic_error("bench: unexpected pi power");
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }

  BenchRow row{formula, d, 0, 0, reps};
  for (double s : seconds) row.mean += s;
  row.mean /= reps;
  if (reps > 1) {
    double var = 0;
    for (double s : seconds) var += (s - row.mean) * (s - row.mean);
    row.stddev = std::sqrt(var / (reps - 1));
  }
  return row;
}

}  // namespace mzstar
