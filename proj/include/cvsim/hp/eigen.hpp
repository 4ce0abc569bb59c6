#pragma once

// NumTraits glue so Eigen dense types can hold hp::Real / hp::Complex scalars.

#include <Eigen/Core>

#include "cvsim/hp/complex.hpp"
#include "cvsim/hp/real.hpp"

namespace Eigen {

template <>
struct NumTraits<cvsim::hp::Real> : GenericNumTraits<cvsim::hp::Real> {
  using Real = cvsim::hp::Real;
  using NonInteger = cvsim::hp::Real;
  using Literal = cvsim::hp::Real;
  using Nested = cvsim::hp::Real;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 32,
    MulCost = 64,
  };

  static inline Real epsilon() {
    Real r(1);
    mpfr_mul_2si(r.raw(), r.raw(), 1 - cvsim::hp::context_precision(), MPFR_RNDN);
    return r;
  }
  static inline Real dummy_precision() {
    Real r(1);
    mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(cvsim::hp::context_precision() / 2), MPFR_RNDN);
    return r;
  }
  static inline Real highest() {
    Real r(1);
    mpfr_mul_2si(r.raw(), r.raw(), 1 << 26, MPFR_RNDN);
    return r;
  }
  static inline Real lowest() { return -highest(); }
  static inline int digits10() {
    return static_cast<int>(static_cast<double>(cvsim::hp::context_precision()) * 0.30103);
  }
};

}  // namespace Eigen

namespace cvsim {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatH = Mat<hp::Real>;
using VecH = Vec<hp::Real>;
using MatHC = Mat<hp::Complex>;
using VecHC = Vec<hp::Complex>;
using MatD = Eigen::MatrixXd;
using VecD = Eigen::VectorXd;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

}  // namespace cvsim
