// Acceptance gate: one PASS/FAIL line per criterion.
//   acceptance        run all criteria
//   acceptance N ...  run only the listed criteria

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mzstar/bell.hpp"
#include "mzstar/bench.hpp"
#include "mzstar/bernoulli.hpp"
#include "mzstar/cyclotomic.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/index.hpp"
#include "mzstar/mzsv_eval.hpp"
#include "mzstar/oracle.hpp"
#include "mzstar/router.hpp"
#include "mzstar/series.hpp"

using namespace mzstar;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

Outcome c1_t4_vs_muneta() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (int d = 0; d <= 200; ++d) bad += zeta_star_31_pow(d) == muneta_zeta_star_31(d) ? 0 : 1;
  const double t = seconds_since(t0);
  return {bad == 0 && t < 30.0, std::to_string(201 - bad) + "/201 equal, " + fmt(t) + " s (limit 30 s)"};
}

Outcome c2_sum_formulas() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0, total = 0;
  for (int d = 1; d <= 8; ++d) {
    for (int n = 0; n <= 8; ++n) {
      const PiValue z = zstar(d, n);
      bad += z == yamamoto_Zstar(d, n) ? 0 : 1;
      bad += z == zstar0(d, n) + zstar1(d, n) ? 0 : 1;
      total += 2;
    }
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 60.0, std::to_string(total - bad) + "/" + std::to_string(total) + " equal, " + fmt(t) +
                                    " s (limit 60 s)"};
}

Outcome c3_cyclotomic_vs_bell() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0, total = 0;
  std::string note;
  for (int m = 0; m <= 3; ++m) {
    for (int d = 1; d <= 3; ++d) {
      try {
        bad += t7_plain(d, m) == bell_plain(d, m + 1) ? 0 : 1;
        bad += t7_tail(d, m) == bell_tail(d, m + 1) ? 0 : 1;
      } catch (const RationalityViolation& e) {
        bad += 2;
        note = std::string("; ") + e.what();
      }
      total += 2;
    }
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 120.0, std::to_string(total - bad) + "/" + std::to_string(total) + " equal and rational, " +
                                     fmt(t) + " s (limit 120 s)" + note};
}

Outcome c4_zeta_star_31() {
  const PiValue expected(Rational(1, 72), 4);
  const bool t4 = zeta_star_31_pow(1) == expected;
  const bool muneta = muneta_zeta_star_31(1) == expected;
  const bool t7 = t7_plain(1, 0) == expected;
  const bool bell = bell_plain(1, 1) == expected;
  // stuffle check: zeta*(3,1) = zeta(3,1) + zeta(4)
  const bool stuffle = zeta_31_pow(1) + zeta_even(2) == expected;

  NumericConfig cfg;
  cfg.truncation_K = 10000;
  const NumericResult r = mzsv_num(parse_index("3,1"), true, cfg);
  const BigFloat tol = BigFloat::from_string("1e-5", cfg.precision_bits);
  const bool vs_exact = (r.value - pi_value_num(expected.coeff, 4, cfg.precision_bits)).abs() < tol;
  const bool vs_decimal = (r.value - BigFloat::from_string("1.352904", cfg.precision_bits)).abs() < tol;

  std::ostringstream d;
  d << "t4 " << t4 << ", muneta " << muneta << ", t7 " << t7 << ", bell " << bell << ", stuffle " << stuffle
    << "; oracle K=10^4 " << r.value.to_string(10) << " (tol 1e-5)";
  return {t4 && muneta && t7 && bell && stuffle && vs_exact && vs_decimal, d.str()};
}

Outcome c5_generating_function() {
  const GradedSeries s = series_tanh_cot(40);
  int bad = 0;
  for (int d = 0; d <= 9; ++d) {
    bad += s.term(4 * d) == zeta_star_31_pow(d) ? 0 : 1;
    bad += s.term(4 * d + 2) == -zeta_star_31_pow_2(d) ? 0 : 1;
  }
  return {bad == 0, std::to_string(20 - bad) + "/20 coefficients through z^40 equal"};
}

Outcome c6_stepping_stone() {
  const GradedSeries z4 = series_zeta_star_4(32);
  int bad = 0;
  for (int d = 0; d <= 8; ++d) {
    PiValue sum = PiValue::zero(static_cast<unsigned>(4 * d));
    for (int j = 0; j <= d; ++j) sum += zeta_31_pow(j) * z4.term(4 * (d - j));
    bad += sum == zeta_star_31_pow(d) ? 0 : 1;
  }
  return {bad == 0, std::to_string(9 - bad) + "/9 identities hold for 0 <= d <= 8"};
}

Outcome c7_weighted_A_sums() {
  NumericConfig cfg;
  cfg.truncation_K = 5000;
  bool ok = true;
  std::ostringstream d;
  for (int dd = 1; dd <= 2; ++dd) {
    BigFloat sum(cfg.precision_bits), tail(cfg.precision_bits);
    for (int r = 1; r <= 2 * dd; ++r) {
      const NumericResult a = A_num(2, 2 * dd, r, cfg);
      const BigFloat w(1L << r, cfg.precision_bits);
      sum += a.value * w;
      tail += a.tail_estimate * w;
    }
    const PiValue exact = zeta_star_31_pow(dd);
    const BigFloat err = (sum - pi_value_num(exact.coeff, exact.pi_power, cfg.precision_bits)).abs();
    ok = ok && err <= tail;
    d << "d=" << dd << ": |err| " << err.to_string(3) << " <= tail " << tail.to_string(3) << "; ";
  }
  return {ok, d.str() + "K = 5000"};
}

Outcome c8_bernoulli() {
  const auto table = bernoulli_table(201);
  int bad = 0;
  for (long k = 1; k <= 100; ++k) {
    Integer expected = 1;
    for (long p = 2; p <= 2 * k + 1; ++p) {
      if (is_prime(p) && (2 * k) % (p - 1) == 0) expected *= p;
    }
    bad += (*table)[static_cast<std::size_t>(2 * k)].denominator() == expected ? 0 : 1;
    bad += (*table)[static_cast<std::size_t>(2 * k + 1)].is_zero() ? 0 : 1;
  }
  return {bad == 0, std::to_string(200 - bad) + "/200 checks (denominators of B_2..B_200, B_3..B_201 = 0)"};
}

Outcome c9_complexity() {
  const std::vector<int> ds{512, 1024, 2048};
  std::vector<double> t4, mu;
  for (int d : ds) t4.push_back(run_bench("t4", d, 5).mean);
  const std::vector<int> muneta_reps{3, 2, 1};
  for (std::size_t i = 0; i < ds.size(); ++i) mu.push_back(run_bench("muneta", ds[i], muneta_reps[i]).mean);

  bool ok = true;
  std::ostringstream d;
  d << "t4 ratios";
  for (std::size_t i = 1; i < ds.size(); ++i) {
    const double r = t4[i] / t4[i - 1];
    ok = ok && r <= 3.0;
    d << " " << fmt(r);
  }
  d << " (want <= 3); muneta ratios";
  for (std::size_t i = 1; i < ds.size(); ++i) {
    const double r = mu[i] / mu[i - 1];
    ok = ok && r >= 3.0;
    d << " " << fmt(r);
  }
  d << " (want >= 3); means[s] t4";
  for (double t : t4) d << " " << fmt(t);
  d << " muneta";
  for (double t : mu) d << " " << fmt(t);
  return {ok, d.str()};
}

Outcome c10_parser() {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> entry(-9, 8);
  int bad = 0;
  for (int t = 0; t < 10000; ++t) {
    Index x;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const int e = entry(rng);
      x.entries.push_back(e >= 0 ? e + 1 : e);
    }
    bad += parse_index(render_index(x)) == x ? 0 : 1;
  }
  int route_bad = 0;
  for (int d = 1; d <= 10; ++d) {
    const Index x = three_two_one_index(d, 0, false);
    const Evaluation via31 = evaluate(x, true);
    route_bad += via31.cls.family == Family::kThreeOne ? 0 : 1;
    // the 2321 routes at m = 0
    route_bad += via31.value == bell_plain(d, 1) ? 0 : 1;
    route_bad += via31.value == t7_plain(d, 0) ? 0 : 1;
  }
  return {bad == 0 && route_bad == 0, std::to_string(10000 - bad) + "/10000 round trips, " +
                                          std::to_string(30 - route_bad) + "/30 routing checks for d <= 10"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "T4 equals Muneta exactly, 0 <= d <= 200", c1_t4_vs_muneta},
      {2, "sum formulas: T11 = Yamamoto and Z* = Z*_0 + Z*_1, d <= 8, n <= 8", c2_sum_formulas},
      {3, "cyclotomic T7 equals Bell, d <= 3, m <= 3", c3_cyclotomic_vs_bell},
      {4, "zeta*(3,1) = pi^4/72 by four routes and the oracle", c4_zeta_star_31},
      {5, "tanh*cot coefficients through z^40", c5_generating_function},
      {6, "stepping-stone identity with series zeta*({4}^j), d <= 8", c6_stepping_stone},
      {7, "zeta*({3,1}^d) from weighted A(2,2d,r), d = 1, 2", c7_weighted_A_sums},
      {8, "Bernoulli denominators and odd zeros, k <= 100", c8_bernoulli},
      {9, "complexity: t4 doubling <= 3x, muneta doubling >= 3x", c9_complexity},
      {10, "parser round trip and routing equivalence", c10_parser},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << " -- " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
