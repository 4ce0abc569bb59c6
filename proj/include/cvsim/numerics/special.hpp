#pragma once

#include "cvsim/hp/complex.hpp"

namespace cvsim {

// Physicists' Hermite polynomial H_n(z) by the three-term recurrence
// H_{k+1}(z) = 2 z H_k(z) - 2 k H_{k-1}(z).
hp::Complex hermite_poly(unsigned n, const hp::Complex& z);

inline constexpr unsigned kHermiteMaxDegree = 1 << 16;

enum class GammaThird { OneThird, TwoThirds };

// Gamma(k + 1/3) or Gamma(k + 2/3) by the recurrence Gamma(z+1) = z Gamma(z)
// down to the base constants, which are cached per precision context.
hp::Real gamma_third(unsigned k, GammaThird offset);

// e^z within eps, Taylor series truncated at N >= max(2e|z|, |log2 eps| + 1).
// Internally evaluated with guard bits covering the series' dynamic range.
hp::Complex exp_hp(const hp::Complex& z, double eps);

}  // namespace cvsim
