#pragma once

#include <complex>
#include <string>

#include "cvsim/hp/real.hpp"

namespace cvsim::hp {

using Complex = std::complex<Real>;

inline Complex make_complex(double re, double im = 0.0) { return Complex(Real(re), Real(im)); }
inline Complex make_complex(double re, double im, Precision p) {
  return Complex(Real(re, p), Real(im, p));
}

inline Precision precision_of(const Complex& z) {
  return std::max(z.real().precision(), z.imag().precision());
}

inline Complex round_to(const Complex& z, Precision p) {
  return Complex(z.real().round_to(p), z.imag().round_to(p));
}

inline Real abs2(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline Real abs(const Complex& z) { return hypot(z.real(), z.imag()); }

// exp, log, sqrt on complexes via mpfr real kernels (principal branches)

inline Complex cexp(const Complex& z) {
  Real m = exp(z.real());
  Real s(Prec{z.imag().precision()}), c(Prec{z.imag().precision()});
  sin_cos(s, c, z.imag());
  return Complex(m * c, m * s);
}

inline Complex clog(const Complex& z) {
  return Complex(log(abs(z)), atan2(z.imag(), z.real()));
}

inline Complex csqrt(const Complex& z) {
  if (z.imag().is_zero()) {
    if (z.real().sign() >= 0) return Complex(sqrt(z.real()), Real(Prec{z.real().precision()}));
    Real r(Prec{z.real().precision()});
    return Complex(r, copysign(sqrt(-z.real()), z.imag()));
  }
  Real m = abs(z);
  Real u = sqrt((m + z.real()) / Real(2));
  Real v = sqrt((m - z.real()) / Real(2));
  return Complex(u, copysign(v, z.imag()));
}

inline Complex polar(const Real& rho, const Real& theta) {
  Real s(Prec{theta.precision()}), c(Prec{theta.precision()});
  sin_cos(s, c, theta);
  return Complex(rho * c, rho * s);
}

// e^{i theta}
inline Complex unit_phase(const Real& theta) { return polar(Real(1), theta); }

inline double log2_magnitude(const Complex& z) {
  return std::max(log2_magnitude(z.real()), log2_magnitude(z.imag()));
}

inline std::complex<double> to_cd(const Complex& z) {
  return {z.real().to_double(), z.imag().to_double()};
}

// Serialization: "re±|im|i@bits", round-trip exact at the stated precision.
inline std::string to_string(const Complex& z) {
  std::string im = hp::abs(z.imag()).to_string();
  return z.real().to_string() + (z.imag().sign() < 0 || mpfr_signbit(z.imag().raw()) ? "-" : "+") +
         im + "i@" + std::to_string(precision_of(z));
}

Complex complex_from_string(const std::string& s);

}  // namespace cvsim::hp
