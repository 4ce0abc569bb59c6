#pragma once

// Airy derivatives by contour quadrature: an oracle independent of the series
// implementation. Ai^(l)(z) = (1/2*pi*i) Int_C (-t)^l e^{t^3/3 - z t} dt with C
// running from inf*e^{-i pi/3} to inf*e^{+i pi/3}; on each ray t^3/3 = -s^3/3.

#include <complex>

#include "support/quad.hpp"

namespace oracle {

inline std::complex<double> airy_deriv(unsigned ell, std::complex<double> z,
                                       long double smax = 14.0L, int panels = 240) {
  const cld up = std::polar(1.0L, (long double)M_PI / 3.0L);
  const cld dn = std::polar(1.0L, -(long double)M_PI / 3.0L);
  cld zl(z.real(), z.imag());
  auto ray = [&](cld dir) {
    return integrate(
        [&](long double s) -> cld {
          cld t = s * dir;
          cld val = std::exp(-s * s * s / 3.0L - zl * t);
          cld p = 1.0L;
          for (unsigned k = 0; k < ell; ++k) p *= -t;
          return p * val * dir;
        },
        0.0L, smax, panels);
  };
  cld integral = ray(up) - ray(dn);
  integral /= cld(0.0L, 2.0L * (long double)M_PI);
  return {(double)integral.real(), (double)integral.imag()};
}

}  // namespace oracle
