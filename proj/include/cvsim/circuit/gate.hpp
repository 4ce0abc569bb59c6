#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cvsim/hp/eigen.hpp"

namespace cvsim {

// Quadrature ordering is [q_1..q_m, p_1..p_m] throughout; a Gaussian unitary
// acts as G^dag Gamma G = S Gamma + d. Omega is [[0, I], [-I, 0]].
MatH symplectic_form(int m);

inline constexpr double kValidationTol = 1e-9;
inline constexpr double kMagnitudeCap = 1e30;  // finite-entry sanity cap

struct GaussianGate {
  int m = 1;
  MatH S;  // 2m x 2m
  VecH d;  // 2m

  static GaussianGate identity(int m);
};

// Displaced passive linear gate: V = e^{i phase} D(delta) W_hat, where W_hat
// maps |alpha> to |W alpha>. Displacement acts after the interferometer.
struct PassiveLinearGate {
  int m = 1;
  MatHC W;      // m x m unitary
  VecHC delta;  // m
  hp::Real phase = hp::Real(0.0, 64);

  static PassiveLinearGate identity(int m);
};

struct CubicGate {
  int mode = 1;  // 1-based
  hp::Real gamma = hp::Real(0.0, 64);
};

// Primitive gate record, kept verbatim for file round-trips.
struct PrimitiveGate {
  enum class Kind { Rotation, Squeeze, Displace, Beamsplitter };
  Kind kind;
  int mode = 1;   // rotation/squeeze/displace
  int mode2 = 2;  // beamsplitter partner
  hp::Real theta = hp::Real(0.0, 64);  // rotation/beamsplitter angle, squeeze r
  hp::Complex alpha;                   // displace amplitude
};

using CircuitGate = std::variant<GaussianGate, PassiveLinearGate, CubicGate, PrimitiveGate>;

struct Circuit {
  int m = 1;
  hp::Precision precision_bits = 512;
  std::string label;
  std::vector<CircuitGate> gates;
};

// ---- validation (violations are data, not exceptions) ----

std::vector<std::string> validate_gate(const GaussianGate& g, double tol = kValidationTol);
std::vector<std::string> validate_gate(const PassiveLinearGate& g, double tol = kValidationTol);
std::vector<std::string> validate_gate(const CubicGate& g, int circuit_m);
std::vector<std::string> validate_circuit(const Circuit& c, double tol = kValidationTol);

// ---- primitive constructors (single-mode / two-mode symplectic realizations) ----

GaussianGate rotation(const hp::Real& theta);
GaussianGate squeeze(const hp::Real& r);
GaussianGate displace(const hp::Complex& alpha);
GaussianGate beamsplitter(const hp::Real& theta);  // two modes

// Passive realizations of the number-preserving primitives.
PassiveLinearGate rotation_passive(const hp::Real& theta);
PassiveLinearGate beamsplitter_passive(const hp::Real& theta);

// Lift a k-mode gate to m modes acting on the given (1-based) modes.
GaussianGate embed_gaussian(const GaussianGate& g, int m, const std::vector<int>& modes);
PassiveLinearGate embed_passive(const PassiveLinearGate& g, int m, const std::vector<int>& modes);

// Lower a primitive record to its typed gate on an m-mode circuit.
CircuitGate lower_primitive(const PrimitiveGate& p, int m);

// ---- composition ----

// compose(V2, V1): apply V1 first. W = W2 W1, delta = W2 delta1 + delta2,
// phase accumulates the displacement-reordering term Im(delta2^T conj(W2 delta1)).
PassiveLinearGate compose_passive(const PassiveLinearGate& v2, const PassiveLinearGate& v1);
PassiveLinearGate invert_passive(const PassiveLinearGate& v);

GaussianGate compose_gaussian(const GaussianGate& g2, const GaussianGate& g1);
GaussianGate invert_gaussian(const GaussianGate& g);
GaussianGate as_gaussian(const PassiveLinearGate& v);  // drops the scalar phase

double symplectic_residual(const MatH& S);  // max-norm of S^T Omega S - Omega
double unitarity_residual(const MatHC& W);  // max-norm of W^dag W - I

}  // namespace cvsim
