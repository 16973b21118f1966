#pragma once

#include "mzstar/pi_value.hpp"

namespace mzstar {

/// zeta({2}^d) = pi^{2d} / (2d+1)!.
PiValue zeta_2_pow(int d);

/// zeta*({2}^d) = (-1)^{d+1} (2^{2d} - 2) B_{2d}/(2d)! pi^{2d}; 1 at d = 0.
PiValue zeta_star_2_pow(int d);

/// zeta({3,1}^d) = 2 pi^{4d} / (4d+2)!.
PiValue zeta_31_pow(int d);

/// zeta*({3,1}^d) by the linear Bernoulli sum
///   4 pi^{4d} sum_{k=0}^{2d} (-1)^k (4^{k+1}-1) B_{2k+2}/(2k+2)! B_{4d-2k}/(4d-2k)!.
/// O(d) big-number operations once the Bernoulli table is filled.
PiValue zeta_star_31_pow(int d);

/// zeta*({3,1}^d, 2), same shape with k running to 2d+1.
PiValue zeta_star_31_pow_2(int d);

/// zeta*({3,1}^d) by Muneta's double sum; O(d^2). Kept as an oracle for the
/// linear formula.
PiValue muneta_zeta_star_31(int d);

/// Bowman-Bradley: Z(d,n) = C(n+2d, n) pi^{2n+4d} / ((2d+1) (2n+4d+1)!).
PiValue bowman_bradley_Z(int d, int n);

/// Yamamoto's explicit Z*(d,n), summed over 2m+k+u = 2d and j+l+v = n.
PiValue yamamoto_Zstar(int d, int n);

/// Sum formulas for 3-2-1 indices: Z*_0 (no trailing 2-block), Z*_1 (nonempty
/// trailing 2-block) and Z* = Z*_0 + Z*_1. d >= 1; zstar1(d, 0) = 0.
PiValue zstar0(int d, int n);
PiValue zstar1(int d, int n);
PiValue zstar(int d, int n);

/// The three sums bundled, with the split invariant checked on construction.
struct SumFormulaResult {
  int d;
  int n;
  PiValue z_star;
  PiValue z_star_0;
  PiValue z_star_1;
};

SumFormulaResult sum_formula(int d, int n);

}  // namespace mzstar
