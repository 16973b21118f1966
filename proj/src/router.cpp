#include "mzstar/router.hpp"

#include <array>
#include <utility>

#include "mzstar/bell.hpp"
#include "mzstar/cyclotomic.hpp"
#include "mzstar/errors.hpp"
#include "mzstar/mzsv_eval.hpp"

namespace mzstar {

namespace {

constexpr std::array<std::pair<Formula, const char*>, 8> kNames{{
    {Formula::kAuto, "auto"},
    {Formula::kTrivial, "trivial"},
    {Formula::kIn0, "in0"},
    {Formula::kIn2, "in2"},
    {Formula::kT4, "t4"},
    {Formula::kMuneta, "muneta"},
    {Formula::kT7, "t7"},
    {Formula::kBell, "bell"},
}};

[[noreturn]] void not_applicable(const Index& ix, const Classification& c, Formula f, bool star) {
  throw UnsupportedFamily("formula '" + formula_name(f) + "' does not apply to " + (star ? "zeta*(" : "zeta(") +
                          render_index(ix) + ") of family " + family_tag(c.family));
}

PiValue star_value(const Index& ix, const Classification& c, Formula& f) {
  const int d = c.d;
  const int m = c.m;
  switch (c.family) {
    case Family::kEmpty:
      if (f == Formula::kAuto) f = Formula::kTrivial;
      if (f == Formula::kTrivial) return PiValue::one();
      break;
    case Family::kTwos:
      if (f == Formula::kAuto) f = Formula::kIn0;
      if (f == Formula::kIn0) return zeta_star_2_pow(d);
      if (f == Formula::kT7) return t7_tail(0, d - 1);
      break;
    case Family::kThreeOne:
      if (f == Formula::kAuto) f = Formula::kT4;
      if (f == Formula::kT4) return zeta_star_31_pow(d);
      if (f == Formula::kMuneta) return muneta_zeta_star_31(d);
      if (f == Formula::kT7) return t7_plain(d, 0);
      if (f == Formula::kBell) return bell_plain(d, 1);
      break;
    case Family::kThreeOneTwo:
      if (f == Formula::kAuto) f = Formula::kT4;
      if (f == Formula::kT4) return zeta_star_31_pow_2(d);
      if (f == Formula::kT7) return t7_tail(d, 0);
      if (f == Formula::kBell) return bell_tail(d, 1);
      break;
    case Family::kTwoThreeTwoOne:
      if (f == Formula::kAuto) f = Formula::kBell;
      if (f == Formula::kBell) return bell_plain(d, m + 1);
      if (f == Formula::kT7) return t7_plain(d, m);
      break;
    case Family::kTwoThreeTwoOneTail:
      if (f == Formula::kAuto) f = Formula::kBell;
      if (f == Formula::kBell) return bell_tail(d, m + 1);
      if (f == Formula::kT7) return t7_tail(d, m);
      break;
    case Family::kGeneric:
      throw UnsupportedFamily("no closed form for zeta*(" + render_index(ix) +
                              "); try `mzstar oracle` for a numerical value");
  }
  not_applicable(ix, c, f, true);
}

PiValue plain_value(const Index& ix, const Classification& c, Formula& f) {
  switch (c.family) {
    case Family::kEmpty:
      if (f == Formula::kAuto) f = Formula::kTrivial;
      if (f == Formula::kTrivial) return PiValue::one();
      break;
    case Family::kTwos:
      if (f == Formula::kAuto) f = Formula::kIn0;
      if (f == Formula::kIn0) return zeta_2_pow(c.d);
      break;
    case Family::kThreeOne:
      if (f == Formula::kAuto) f = Formula::kIn2;
      if (f == Formula::kIn2) return zeta_31_pow(c.d);
      break;
    default:
      if (f == Formula::kAuto) {
        throw UnsupportedFamily("no closed form for zeta(" + render_index(ix) +
                                "); try `mzstar oracle --nostar` for a numerical value");
      }
      break;
  }
  not_applicable(ix, c, f, false);
}

}  // namespace

std::string formula_name(Formula f) {
  for (const auto& [k, name] : kNames) {
    if (k == f) return name;
  }
  return "auto";
}

Formula parse_formula(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  throw DomainError("unknown formula '" + std::string(name) + "'");
}

Evaluation evaluate(const Index& ix, bool star, Formula formula) {
  if (!ix.admissible()) throw NumericPrecondition("divergent index " + render_index(ix) + " (leading entry 1)");
  Evaluation e{ix, classify(ix), PiValue::one(), formula};
  e.value = star ? star_value(ix, e.cls, e.formula) : plain_value(ix, e.cls, e.formula);
  return e;
}

}  // namespace mzstar
