#pragma once

#include <mpfr.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cvsim::hp {

// Raised when an operation needs the ambient precision context and none is set.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Precision = mpfr_prec_t;

namespace detail {
inline thread_local Precision ambient_precision = 0;  // 0 = unset
}

inline bool context_set() { return detail::ambient_precision > 0; }

inline Precision context_precision() {
  if (!context_set())
    throw ConfigError("hp: precision context unset (use ScopedPrecision or pass precision explicitly)");
  return detail::ambient_precision;
}

// RAII ambient precision for the current thread.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(Precision bits) : saved_(detail::ambient_precision) {
    if (bits < 64) throw ConfigError("hp: precision must be at least 64 bits");
    detail::ambient_precision = bits;
  }
  ~ScopedPrecision() { detail::ambient_precision = saved_; }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  Precision saved_;
};

// Tag wrapper so a bare integer can never be mistaken for a precision.
struct Prec {
  Precision bits;
};

// Arbitrary-precision real, value semantics over mpfr_t.
// Binary operations produce results at the larger operand precision;
// round mode is always nearest-even.
class Real {
 public:
  Real() : Real(Prec{context_precision()}) {}

  explicit Real(Prec prec) {
    mpfr_init2(v_, prec.bits);
    mpfr_set_zero(v_, 1);
  }

  Real(double d) : Real(Prec{context_precision()}) { mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(int i) : Real(Prec{context_precision()}) { mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(long i) : Real(Prec{context_precision()}) { mpfr_set_si(v_, i, MPFR_RNDN); }
  Real(unsigned i) : Real(Prec{context_precision()}) { mpfr_set_ui(v_, i, MPFR_RNDN); }
  Real(unsigned long i) : Real(Prec{context_precision()}) { mpfr_set_ui(v_, i, MPFR_RNDN); }

  Real(double d, Precision prec) : Real(Prec{prec}) { mpfr_set_d(v_, d, MPFR_RNDN); }

  explicit Real(const std::string& s) : Real(s, context_precision()) {}
  Real(const std::string& s, Precision prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("hp::Real: cannot parse \"" + s + "\"");
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      ensure(mpfr_get_prec(o.v_));
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) {
      if (v_[0]._mpfr_d) mpfr_clear(v_);
      v_[0] = o.v_[0];
      o.v_[0]._mpfr_d = nullptr;
    }
    return *this;
  }

  ~Real() {
    if (v_[0]._mpfr_d) mpfr_clear(v_);
  }

  Precision precision() const { return mpfr_get_prec(v_); }

  // Rounds to the given precision (value-preserving when widening).
  Real round_to(Precision prec) const {
    Real r(Prec{prec});
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(Prec{join(a, b)});
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(Prec{join(a, b)});
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(Prec{join(a, b)});
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(Prec{join(a, b)});
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(Prec{precision()});
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }

  // Canonical decimal string, round-trip exact at this precision.
  std::string to_string() const;

  static Real pi(Precision p) {
    Real r(Prec{p});
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

 private:
  void ensure(Precision p) {
    if (!v_[0]._mpfr_d) mpfr_init2(v_, p);
  }
  static Precision join(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  mpfr_t v_;
};

// ---- free functions (ADL targets for std::complex and Eigen) ----

inline Real abs(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real fabs(const Real& a) { return abs(a); }

inline Real sqrt(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real cbrt(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_cbrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log1p(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real expm1(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_expm1(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sin(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real cos(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline void sin_cos(Real& s, Real& c, const Real& a) {
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}
inline Real tanh(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_tanh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real cosh(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sinh(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(Prec{std::max(y.precision(), x.precision())});
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r(Prec{std::max(y.precision(), x.precision())});
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r(Prec{std::max(y.precision(), x.precision())});
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, long n) {
  Real r(Prec{x.precision()});
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
inline Real floor(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_floor(r.raw(), a.raw());
  return r;
}
inline Real ceil(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_ceil(r.raw(), a.raw());
  return r;
}
inline Real gamma(const Real& a) {
  Real r(Prec{a.precision()});
  mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline bool isfinite(const Real& a) { return a.is_finite(); }
inline bool isnan(const Real& a) { return a.is_nan(); }
inline bool isinf(const Real& a) { return mpfr_inf_p(a.raw()); }
inline Real copysign(const Real& x, const Real& y) {
  Real r(Prec{x.precision()});
  mpfr_copysign(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return a < b ? a : b; }

inline std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.to_string(); }

// Factorial as a Real at the given precision.
inline Real factorial(unsigned long n, Precision p) {
  Real r(Prec{p});
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

// log2 of the magnitude; very negative for zero. Cheap (exponent read).
inline double log2_magnitude(const Real& a) {
  if (a.is_zero() || !a.is_finite()) return -1e300;
  return static_cast<double>(mpfr_get_exp(a.raw()));
}

inline std::string Real::to_string() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";
  // ceil(p * log10(2)) + 2 digits guarantee exact round-trip at precision p
  size_t digits = static_cast<size_t>(static_cast<double>(precision()) * 0.30102999566398120) + 3;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m = m.substr(1);
  }
  // strip trailing zeros (keep at least one digit)
  size_t last = m.find_last_not_of('0');
  m = m.substr(0, std::max<size_t>(last + 1, 1));
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

}  // namespace cvsim::hp
