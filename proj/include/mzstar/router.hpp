#pragma once

#include <string>
#include <string_view>

#include "mzstar/index.hpp"
#include "mzstar/pi_value.hpp"

namespace mzstar {

enum class Formula { kAuto, kTrivial, kIn0, kIn2, kT4, kMuneta, kT7, kBell };

/// "auto", "trivial", "in0", "in2", "t4", "muneta", "t7", "bell".
std::string formula_name(Formula f);
/// Inverse of formula_name; throws DomainError on an unknown name.
Formula parse_formula(std::string_view name);

struct Evaluation {
  Index index;
  Classification cls;
  PiValue value;
  Formula formula;
};

/// Exact value of zeta*(ix) (star) or zeta(ix) through the closed form for
/// its family.
///
/// Star routes (default first):
///   {2}^d                 in0, t7
///   {3,1}^d               t4, muneta, t7, bell
///   {3,1}^d,2             t4, t7, bell
///   2321 and 2321tail     bell, t7
/// Non-star routes: {2}^d by in0 and {3,1}^d by in2.
/// The empty index is 1 in both cases.
///
/// Throws NumericPrecondition for a divergent index and UnsupportedFamily
/// when no implemented closed form applies (or the forced one does not).
Evaluation evaluate(const Index& ix, bool star, Formula formula = Formula::kAuto);

}  // namespace mzstar
