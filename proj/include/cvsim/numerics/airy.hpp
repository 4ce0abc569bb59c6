#pragma once

#include "cvsim/hp/complex.hpp"

namespace cvsim {

struct AiryResult {
  hp::Complex value;
  double bound;  // certified absolute error of value
  long depth;    // series terms kept per branch
};

inline constexpr long kAiryDefaultDepthCap = 4'000'000;

// ell-th derivative of the Airy function at w, from the two Maclaurin-type
// series weighted by Gamma(k+1/3) / Gamma(k+2/3), truncated at the smallest
// admissible depth d (2d > 3|w|^3) whose tail bound
//   (1+|w|/2d)/(1-3|w|^3/2d) * |w|^(3d-ell)/(2d/3)^d
// is <= eps. Throws ResourceError("depth exhausted", best_bound) if no depth
// below the cap reaches eps.
AiryResult airy_derivative(unsigned ell, const hp::Complex& w, double eps,
                           long depth_cap = kAiryDefaultDepthCap);

// Ai(0) = 3^(-2/3)/Gamma(2/3) and Ai'(0) = -3^(-1/3)/Gamma(1/3) at context precision.
hp::Real airy_at_zero();
hp::Real airy_prime_at_zero();

}  // namespace cvsim
