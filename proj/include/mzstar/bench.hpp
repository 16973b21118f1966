#pragma once

#include <string>

namespace mzstar {

struct BenchRow {
  std::string formula;  // "t4" or "muneta"
  int d = 0;
  double mean = 0;      // seconds per evaluation
  double stddev = 0;
  int reps = 0;
};

/// Times `reps` evaluations of zeta*({3,1}^d) by the given formula.
/// Bernoulli and factorial tables up to index 4d+2 are filled before the
/// clock starts; each evaluation is timed separately.
BenchRow run_bench(const std::string& formula, int d, int reps);

}  // namespace mzstar
