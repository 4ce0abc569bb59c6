#include "cvsim/circuit/gate.hpp"

#include <cmath>

#include "cvsim/errors.hpp"

namespace cvsim {

MatH symplectic_form(int m) {
  MatH omega = MatH::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    omega(i, m + i) = hp::Real(1);
    omega(m + i, i) = hp::Real(-1);
  }
  return omega;
}

GaussianGate GaussianGate::identity(int m) {
  GaussianGate g;
  g.m = m;
  g.S = MatH::Identity(2 * m, 2 * m);
  g.d = VecH::Zero(2 * m);
  return g;
}

PassiveLinearGate PassiveLinearGate::identity(int m) {
  PassiveLinearGate v;
  v.m = m;
  v.W = MatHC::Identity(m, m);
  v.delta = VecHC::Zero(m);
  v.phase = hp::Real(0);
  return v;
}

double symplectic_residual(const MatH& S) {
  int n = static_cast<int>(S.rows());
  MatH omega = symplectic_form(n / 2);
  MatH r = S.transpose() * omega * S - omega;
  double mx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mx = std::max(mx, hp::abs(r(i, j)).to_double());
  return mx;
}

double unitarity_residual(const MatHC& W) {
  MatHC r = W.adjoint() * W - MatHC::Identity(W.rows(), W.cols());
  double mx = 0;
  for (int i = 0; i < W.rows(); ++i)
    for (int j = 0; j < W.cols(); ++j) mx = std::max(mx, hp::abs(r(i, j)).to_double());
  return mx;
}

std::vector<std::string> validate_gate(const GaussianGate& g, double tol) {
  std::vector<std::string> out;
  if (g.m < 1) {
    out.push_back("gaussian: mode count must be >= 1");
    return out;
  }
  if (g.S.rows() != 2 * g.m || g.S.cols() != 2 * g.m || g.d.size() != 2 * g.m) {
    out.push_back("gaussian: S/d shape does not match mode count");
    return out;
  }
  for (int i = 0; i < 2 * g.m; ++i) {
    for (int j = 0; j < 2 * g.m; ++j)
      if (!g.S(i, j).is_finite() || hp::abs(g.S(i, j)).to_double() > kMagnitudeCap) {
        out.push_back("gaussian: non-finite or oversized entry in S");
        return out;
      }
    if (!g.d(i).is_finite() || hp::abs(g.d(i)).to_double() > kMagnitudeCap) {
      out.push_back("gaussian: non-finite or oversized entry in d");
      return out;
    }
  }
  double resid = symplectic_residual(g.S);
  if (resid > tol)
    out.push_back("gaussian: symplectic condition violated, residual " + std::to_string(resid));
  return out;
}

std::vector<std::string> validate_gate(const PassiveLinearGate& g, double tol) {
  std::vector<std::string> out;
  if (g.m < 1) {
    out.push_back("passive: mode count must be >= 1");
    return out;
  }
  if (g.W.rows() != g.m || g.W.cols() != g.m || g.delta.size() != g.m) {
    out.push_back("passive: W/delta shape does not match mode count");
    return out;
  }
  for (int i = 0; i < g.m; ++i) {
    for (int j = 0; j < g.m; ++j) {
      const auto& w = g.W(i, j);
      if (!w.real().is_finite() || !w.imag().is_finite() ||
          hp::abs(w).to_double() > kMagnitudeCap) {
        out.push_back("passive: non-finite or oversized entry in W");
        return out;
      }
    }
    if (!g.delta(i).real().is_finite() || !g.delta(i).imag().is_finite() ||
        hp::abs(g.delta(i)).to_double() > kMagnitudeCap) {
      out.push_back("passive: non-finite or oversized entry in delta");
      return out;
    }
  }
  double resid = unitarity_residual(g.W);
  if (resid > tol)
    out.push_back("passive: unitarity violated, residual " + std::to_string(resid));
  else {
    double sresid = symplectic_residual(as_gaussian(g).S);
    if (sresid > std::max(tol, 8 * resid))
      out.push_back("passive: induced symplectic check failed, residual " + std::to_string(sresid));
  }
  return out;
}

std::vector<std::string> validate_gate(const CubicGate& g, int circuit_m) {
  std::vector<std::string> out;
  if (g.mode < 1 || g.mode > circuit_m)
    out.push_back("cubic: mode index " + std::to_string(g.mode) + " outside 1.." +
                  std::to_string(circuit_m));
  if (!g.gamma.is_finite() || hp::abs(g.gamma).to_double() > kMagnitudeCap)
    out.push_back("cubic: non-finite or oversized cubicity");
  return out;
}

std::vector<std::string> validate_circuit(const Circuit& c, double tol) {
  std::vector<std::string> out;
  if (c.m < 1) out.push_back("circuit: mode count must be >= 1");
  int idx = 0;
  for (const auto& gate : c.gates) {
    ++idx;
    std::vector<std::string> sub = std::visit(
        [&](const auto& g) -> std::vector<std::string> {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, GaussianGate>) {
            auto v = validate_gate(g, tol);
            if (g.m != c.m) v.push_back("gaussian: gate mode count differs from circuit");
            return v;
          } else if constexpr (std::is_same_v<T, PassiveLinearGate>) {
            auto v = validate_gate(g, tol);
            if (g.m != c.m) v.push_back("passive: gate mode count differs from circuit");
            return v;
          } else if constexpr (std::is_same_v<T, CubicGate>) {
            return validate_gate(g, c.m);
          } else {
            const PrimitiveGate& p = g;
            std::vector<std::string> v;
            bool two = p.kind == PrimitiveGate::Kind::Beamsplitter;
            if (p.mode < 1 || p.mode > c.m || (two && (p.mode2 < 1 || p.mode2 > c.m)))
              v.push_back("primitive: mode index outside circuit");
            if (two && p.mode == p.mode2) v.push_back("beamsplitter: modes must differ");
            return v;
          }
        },
        gate);
    for (auto& s : sub) out.push_back("gate " + std::to_string(idx) + ": " + s);
  }
  return out;
}

GaussianGate rotation(const hp::Real& theta) {
  GaussianGate g = GaussianGate::identity(1);
  hp::Real s(hp::Prec{theta.precision()}), c(hp::Prec{theta.precision()});
  hp::sin_cos(s, c, theta);
  g.S(0, 0) = c;
  g.S(0, 1) = -s;
  g.S(1, 0) = s;
  g.S(1, 1) = c;
  return g;
}

GaussianGate squeeze(const hp::Real& r) {
  GaussianGate g = GaussianGate::identity(1);
  g.S(0, 0) = hp::exp(-r);
  g.S(1, 1) = hp::exp(r);
  return g;
}

GaussianGate displace(const hp::Complex& alpha) {
  GaussianGate g = GaussianGate::identity(1);
  hp::Real rt2 = hp::sqrt(hp::Real(2));
  g.d(0) = rt2 * alpha.real();
  g.d(1) = rt2 * alpha.imag();
  return g;
}

GaussianGate beamsplitter(const hp::Real& theta) {
  return as_gaussian(beamsplitter_passive(theta));
}

PassiveLinearGate rotation_passive(const hp::Real& theta) {
  PassiveLinearGate v = PassiveLinearGate::identity(1);
  v.W(0, 0) = hp::unit_phase(theta);
  return v;
}

PassiveLinearGate beamsplitter_passive(const hp::Real& theta) {
  PassiveLinearGate v = PassiveLinearGate::identity(2);
  hp::Real s(hp::Prec{theta.precision()}), c(hp::Prec{theta.precision()});
  hp::sin_cos(s, c, theta);
  v.W(0, 0) = hp::Complex(c, hp::Real(0));
  v.W(0, 1) = hp::Complex(-s, hp::Real(0));
  v.W(1, 0) = hp::Complex(s, hp::Real(0));
  v.W(1, 1) = hp::Complex(c, hp::Real(0));
  return v;
}

GaussianGate embed_gaussian(const GaussianGate& g, int m, const std::vector<int>& modes) {
  GaussianGate out = GaussianGate::identity(m);
  int k = g.m;
  for (int a = 0; a < k; ++a) {
    int i = modes[a] - 1;
    out.d(i) = g.d(a);
    out.d(m + i) = g.d(k + a);
    for (int b = 0; b < k; ++b) {
      int j = modes[b] - 1;
      out.S(i, j) = g.S(a, b);
      out.S(i, m + j) = g.S(a, k + b);
      out.S(m + i, j) = g.S(k + a, b);
      out.S(m + i, m + j) = g.S(k + a, k + b);
    }
  }
  return out;
}

PassiveLinearGate embed_passive(const PassiveLinearGate& g, int m, const std::vector<int>& modes) {
  PassiveLinearGate out = PassiveLinearGate::identity(m);
  int k = g.m;
  for (int a = 0; a < k; ++a) {
    int i = modes[a] - 1;
    out.delta(i) = g.delta(a);
    for (int b = 0; b < k; ++b) out.W(i, modes[b] - 1) = g.W(a, b);
  }
  out.phase = g.phase;
  return out;
}

CircuitGate lower_primitive(const PrimitiveGate& p, int m) {
  switch (p.kind) {
    case PrimitiveGate::Kind::Rotation:
      return embed_passive(rotation_passive(p.theta), m, {p.mode});
    case PrimitiveGate::Kind::Squeeze:
      return embed_gaussian(squeeze(p.theta), m, {p.mode});
    case PrimitiveGate::Kind::Displace: {
      PassiveLinearGate v = PassiveLinearGate::identity(1);
      v.delta(0) = p.alpha;
      return embed_passive(v, m, {p.mode});
    }
    case PrimitiveGate::Kind::Beamsplitter:
      return embed_passive(beamsplitter_passive(p.theta), m, {p.mode, p.mode2});
  }
  throw std::logic_error("lower_primitive: unknown kind");
}

PassiveLinearGate compose_passive(const PassiveLinearGate& v2, const PassiveLinearGate& v1) {
  if (v2.m != v1.m) throw ValidationError("compose_passive: mode count mismatch");
  PassiveLinearGate out;
  out.m = v1.m;
  out.W = v2.W * v1.W;
  VecHC moved = v2.W * v1.delta;
  out.delta = moved + v2.delta;
  // D(d2) D(W2 d1) = e^{i Im(d2^T conj(W2 d1))} D(d2 + W2 d1)
  hp::Real im(0);
  for (int i = 0; i < out.m; ++i) im += (v2.delta(i) * std::conj(moved(i))).imag();
  out.phase = v1.phase + v2.phase + im;
  return out;
}

PassiveLinearGate invert_passive(const PassiveLinearGate& v) {
  PassiveLinearGate out;
  out.m = v.m;
  out.W = v.W.adjoint();
  out.delta = -(out.W * v.delta);
  out.phase = -v.phase;
  return out;
}

GaussianGate compose_gaussian(const GaussianGate& g2, const GaussianGate& g1) {
  if (g2.m != g1.m) throw ValidationError("compose_gaussian: mode count mismatch");
  GaussianGate out;
  out.m = g1.m;
  out.S = g2.S * g1.S;
  out.d = g2.S * g1.d + g2.d;
  return out;
}

GaussianGate invert_gaussian(const GaussianGate& g) {
  // symplectic inverse: S^{-1} = -Omega S^T Omega
  GaussianGate out;
  out.m = g.m;
  MatH omega = symplectic_form(g.m);
  out.S = -(omega * g.S.transpose() * omega);
  out.d = -(out.S * g.d);
  return out;
}

GaussianGate as_gaussian(const PassiveLinearGate& v) {
  GaussianGate g = GaussianGate::identity(v.m);
  hp::Real rt2 = hp::sqrt(hp::Real(2));
  for (int i = 0; i < v.m; ++i) {
    g.d(i) = rt2 * v.delta(i).real();
    g.d(v.m + i) = rt2 * v.delta(i).imag();
    for (int j = 0; j < v.m; ++j) {
      g.S(i, j) = v.W(i, j).real();
      g.S(i, v.m + j) = -v.W(i, j).imag();
      g.S(v.m + i, j) = v.W(i, j).imag();
      g.S(v.m + i, v.m + j) = v.W(i, j).real();
    }
  }
  return g;
}

}  // namespace cvsim
