#pragma once

#include <string>
#include <vector>

namespace mzstar {

struct CrosscheckBounds {
  int max_d = 10;
  int max_n = 5;
  int max_m = 3;
};

struct CrosscheckCase {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  /// Set when a side threw (e.g. a non-rational cyclotomic sum).
  std::string error;
};

struct CrosscheckReport {
  std::string suite;
  CrosscheckBounds bounds;
  std::vector<CrosscheckCase> cases;

  bool all_equal() const;
};

/// t4-muneta, t11-yamamoto, t7-bell, eq08, in4, t3-series.
const std::vector<std::string>& crosscheck_suites();

/// Largest bounds accepted per suite; larger requests throw DomainError.
CrosscheckBounds crosscheck_limits(const std::string& suite);

/// Runs every case within the bounds. Cases are reported in a fixed order;
/// exceptions inside a case turn into a failed case instead of propagating.
CrosscheckReport run_crosscheck(const std::string& suite, const CrosscheckBounds& bounds);

}  // namespace mzstar
