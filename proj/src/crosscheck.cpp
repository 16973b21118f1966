#include "mzstar/crosscheck.hpp"

#include <functional>

#include "mzstar/bell.hpp"
#include "mzstar/cyclotomic.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/mzsv_eval.hpp"
#include "mzstar/series.hpp"

namespace mzstar {

namespace {

std::string args(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void compare(CrosscheckReport& report, std::string label, const std::function<PiValue()>& lhs,
             const std::function<PiValue()>& rhs) {
  CrosscheckCase c;
  c.label = std::move(label);
  try {
    const PiValue a = lhs();
    const PiValue b = rhs();
    c.lhs = a.to_string();
    c.rhs = b.to_string();
    c.equal = (a == b);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  report.cases.push_back(std::move(c));
}

}  // namespace

bool CrosscheckReport::all_equal() const {
  for (const auto& c : cases) {
    if (!c.equal) return false;
  }
  return true;
}

const std::vector<std::string>& crosscheck_suites() {
  static const std::vector<std::string> suites{"t4-muneta", "t11-yamamoto", "t7-bell", "eq08", "in4", "t3-series"};
  return suites;
}

CrosscheckBounds crosscheck_limits(const std::string& suite) {
  if (suite == "t4-muneta") return {1000, 0, 0};
  if (suite == "t11-yamamoto") return {12, 12, 0};
  if (suite == "eq08") return {20, 20, 0};
  if (suite == "t7-bell") return {5, 0, 5};
  if (suite == "in4") return {30, 0, 0};
  if (suite == "t3-series") return {30, 0, 0};
  throw DomainError("unknown crosscheck suite '" + suite + "'");
}

CrosscheckReport run_crosscheck(const std::string& suite, const CrosscheckBounds& bounds) {
  const CrosscheckBounds lim = crosscheck_limits(suite);
  if (bounds.max_d < 0 || bounds.max_n < 0 || bounds.max_m < 0) throw DomainError("crosscheck bounds must be >= 0");
  if (bounds.max_d > lim.max_d || (lim.max_n > 0 && bounds.max_n > lim.max_n) ||
      (lim.max_m > 0 && bounds.max_m > lim.max_m)) {
    throw DomainError("crosscheck " + suite + ": bounds exceed the limits max-d " + std::to_string(lim.max_d) +
                      ", max-n " + std::to_string(lim.max_n) + ", max-m " + std::to_string(lim.max_m));
  }

  CrosscheckReport r{suite, bounds, {}};
  if (suite == "t4-muneta") {
    for (int d = 0; d <= bounds.max_d; ++d) {
      compare(r, "d=" + std::to_string(d), [d] { return zeta_star_31_pow(d); },
              [d] { return muneta_zeta_star_31(d); });
    }
  } else if (suite == "t11-yamamoto") {
    for (int d = 1; d <= bounds.max_d; ++d) {
      for (int n = 0; n <= bounds.max_n; ++n) {
        compare(r, "Z*" + args(d, n), [=] { return zstar(d, n); }, [=] { return yamamoto_Zstar(d, n); });
      }
    }
  } else if (suite == "eq08") {
    for (int d = 1; d <= bounds.max_d; ++d) {
      for (int n = 0; n <= bounds.max_n; ++n) {
        compare(r, "Z*" + args(d, n) + " = Z*0 + Z*1", [=] { return zstar(d, n); },
                [=] { return zstar0(d, n) + zstar1(d, n); });
      }
    }
  } else if (suite == "t7-bell") {
    for (int m = 0; m <= bounds.max_m; ++m) {
      for (int d = 1; d <= bounds.max_d; ++d) {
        compare(r, "plain d=" + std::to_string(d) + " m=" + std::to_string(m), [=] { return t7_plain(d, m); },
                [=] { return bell_plain(d, m + 1); });
        compare(r, "tail d=" + std::to_string(d) + " m=" + std::to_string(m), [=] { return t7_tail(d, m); },
                [=] { return bell_tail(d, m + 1); });
      }
    }
  } else if (suite == "in4") {
    const int T = 4 * bounds.max_d;
    const GradedSeries z4 = series_zeta_star_4(T);
    for (int d = 0; d <= bounds.max_d; ++d) {
      compare(r, "d=" + std::to_string(d), [d] { return zeta_star_31_pow(d); },
              [&, d] {
                PiValue sum = PiValue::zero(static_cast<unsigned>(4 * d));
                for (int j = 0; j <= d; ++j) sum += zeta_31_pow(j) * z4.term(4 * (d - j));
                return sum;
              });
    }
  } else if (suite == "t3-series") {
    const GradedSeries s = series_tanh_cot(4 * bounds.max_d + 2);
    for (int d = 0; d <= bounds.max_d; ++d) {
      compare(r, "z^" + std::to_string(4 * d), [&, d] { return s.term(4 * d); },
              [d] { return zeta_star_31_pow(d); });
      compare(r, "z^" + std::to_string(4 * d + 2), [&, d] { return s.term(4 * d + 2); },
              [d] { return -zeta_star_31_pow_2(d); });
    }
  }
  return r;
}

}  // namespace mzstar
