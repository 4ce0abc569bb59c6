#pragma once

// Spouge's approximation for Gamma, independent of mpfr_gamma. Relative error
// below a^{-1/2} (2 pi)^{-(a+1/2)}; a = 96 is comfortably past 70 digits.

#include "cvsim/hp/real.hpp"

namespace oracle {

inline cvsim::hp::Real spouge_gamma(const cvsim::hp::Real& z, int a = 96) {
  using cvsim::hp::Real;
  cvsim::hp::Precision p = z.precision() + 64;
  cvsim::hp::ScopedPrecision scope(p);
  Real zz = z.round_to(p) - Real(1);  // Spouge computes Gamma(zz + 1)
  Real two_pi = Real(2) * Real::pi(p);
  Real acc = sqrt(two_pi);
  Real sign(1);
  for (int k = 1; k < a; ++k) {
    Real ak(a - k);
    Real ck = sign * pow(ak, Real(k) - Real(0.5)) * exp(ak) /
              cvsim::hp::factorial(static_cast<unsigned long>(k - 1), p);
    acc += ck / (zz + Real(k));
    sign = -sign;
  }
  Real base = zz + Real(a);
  return pow(base, zz + Real(0.5)) * exp(-base) * acc;
}

}  // namespace oracle
