#pragma once

// Factors a Gaussian gate (S, d) into primitive operations with pinned unitary
// phases: multimode passive layers, single-mode squeezers, one displacement.
// Route: pre-Iwasawa S = N M O with N a symplectic shear block, M a squeeze
// block, O passive; the shear and squeeze blocks reduce to single-mode
// primitives through small symmetric eigenproblems.
//
// Templated on the real scalar so the same code drives the high-precision
// amplitude calculus and the double-precision Fock oracle.

#include <complex>
#include <variant>
#include <vector>

#include "cvsim/circuit/gate.hpp"
#include "cvsim/errors.hpp"

namespace cvsim {

template <typename R>
struct PassiveUOp {
  Mat<std::complex<R>> W;
};
template <typename R>
struct SqueezeOp {
  int mode;  // 0-based
  R r;
};
template <typename R>
struct DisplaceOp {
  Vec<std::complex<R>> delta;
};

template <typename R>
using PrimOp = std::variant<PassiveUOp<R>, SqueezeOp<R>, DisplaceOp<R>>;

namespace factor_detail {

template <typename R>
R eps_of() {
  return Eigen::NumTraits<R>::epsilon();
}

template <typename R>
Mat<R> cholesky_lower(const Mat<R>& a) {
  using std::sqrt;
  int n = static_cast<int>(a.rows());
  Mat<R> l = Mat<R>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      R s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (!(s > R(0))) throw NumericalError("cholesky: matrix not positive definite");
        l(i, j) = sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

// Cyclic Jacobi for symmetric matrices; deterministic sweep order and sign
// convention (largest-magnitude component of each eigenvector positive).
template <typename R>
void jacobi_sym(const Mat<R>& a_in, Mat<R>& q, Vec<R>& lam) {
  using std::abs;
  using std::sqrt;
  int n = static_cast<int>(a_in.rows());
  Mat<R> a = a_in;
  q = Mat<R>::Identity(n, n);
  R eps = eps_of<R>();
  for (int sweep = 0; sweep < 64; ++sweep) {
    R off(0);
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) off += a(p, r) * a(p, r);
    R scale(0);
    for (int p = 0; p < n; ++p) scale += a(p, p) * a(p, p);
    if (!(off > eps * eps * (scale + R(1)))) break;
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        if (abs(a(p, r)) <= eps * (abs(a(p, p)) + abs(a(r, r)) + R(1)) * R(0.25)) continue;
        R theta = (a(r, r) - a(p, p)) / (R(2) * a(p, r));
        R t = R(1) / (abs(theta) + sqrt(theta * theta + R(1)));
        if (theta < R(0)) t = -t;
        R c = R(1) / sqrt(t * t + R(1));
        R s = t * c;
        for (int k = 0; k < n; ++k) {
          R akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          R apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (int k = 0; k < n; ++k) {
          R qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }
  lam = a.diagonal();
  // deterministic order: descending eigenvalues, then sign-fix each column
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (int j = i + 1; j < n; ++j)
      if (lam(j) > lam(best)) best = j;
    if (best != i) {
      std::swap(lam(i), lam(best));
      q.col(i).swap(q.col(best));
    }
    int arg = 0;
    for (int k = 1; k < n; ++k)
      if (abs(q(k, i)) > abs(q(arg, i))) arg = k;
    if (q(arg, i) < R(0)) q.col(i) = -q.col(i);
  }
}

// det-one 2x2 M = Rot(gamma) diag(s, 1/s) Rot(beta), rotations [[c,-s],[s,c]].
template <typename R>
void svd2(const Mat<R>& mm, R& gamma_out, R& s_out, R& beta_out) {
  using std::atan2;
  using std::sqrt;
  R e = (mm(0, 0) + mm(1, 1)) / R(2);
  R f = (mm(0, 0) - mm(1, 1)) / R(2);
  R g = (mm(1, 0) + mm(0, 1)) / R(2);
  R h = (mm(1, 0) - mm(0, 1)) / R(2);
  R qv = sqrt(e * e + h * h);
  R rv = sqrt(f * f + g * g);
  R s1 = qv + rv;
  R a1 = atan2(g, f);
  R a2 = atan2(h, e);
  gamma_out = (a2 + a1) / R(2);
  beta_out = (a2 - a1) / R(2);
  s_out = s1;
}

}  // namespace factor_detail

template <typename R>
struct PreIwasawa {
  Mat<R> P;                 // symmetric shear block
  Mat<R> L;                 // lower triangular, positive diagonal
  Mat<std::complex<R>> U;   // passive unitary
};

// S = [[I,0],[P,I]] [[L,0],[0,L^-T]] O(U), blocks in qqpp ordering.
template <typename R>
PreIwasawa<R> pre_iwasawa(const Mat<R>& s) {
  using C = std::complex<R>;
  int m = static_cast<int>(s.rows()) / 2;
  Mat<R> a = s.topLeftCorner(m, m), b = s.topRightCorner(m, m);
  Mat<R> lam = a * a.transpose() + b * b.transpose();
  Mat<R> l = factor_detail::cholesky_lower(lam);
  // conj(U) = L^{-1} (A + iB), forward substitution per column
  Mat<C> k(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) k(i, j) = C(a(i, j), b(i, j));
  Mat<C> ubar(m, m);
  for (int col = 0; col < m; ++col) {
    for (int i = 0; i < m; ++i) {
      C s_acc = k(i, col);
      for (int t = 0; t < i; ++t) s_acc -= C(l(i, t), R(0)) * ubar(t, col);
      ubar(i, col) = s_acc / C(l(i, i), R(0));
    }
  }
  Mat<C> u = ubar.conjugate();
  // T = S O^T = [[L,0],[P L, L^-T]]
  Mat<R> x(m, m), y(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      x(i, j) = u(i, j).real();
      y(i, j) = u(i, j).imag();
    }
  Mat<R> o(2 * m, 2 * m);
  o.topLeftCorner(m, m) = x;
  o.topRightCorner(m, m) = -y;
  o.bottomLeftCorner(m, m) = y;
  o.bottomRightCorner(m, m) = x;
  Mat<R> t = s * o.transpose();
  Mat<R> t21 = t.bottomLeftCorner(m, m);
  // P = T21 L^{-1}: back substitution on L^T P^T = T21^T
  Mat<R> p(m, m);
  for (int row = 0; row < m; ++row) {
    for (int j = m - 1; j >= 0; --j) {
      R acc = t21(row, j);
      for (int t2 = j + 1; t2 < m; ++t2) acc -= p(row, t2) * l(t2, j);
      p(row, j) = acc / l(j, j);
    }
  }
  Mat<R> psym = (p + p.transpose()) / R(2);
  return PreIwasawa<R>{psym, l, u};
}

// Primitive list in application order (first element acts first on the ket).
template <typename R>
std::vector<PrimOp<R>> factor_gaussian(const Mat<R>& s, const Vec<R>& d) {
  using C = std::complex<R>;
  using std::abs;
  using std::log;
  using std::sqrt;
  int m = static_cast<int>(s.rows()) / 2;
  PreIwasawa<R> pi = pre_iwasawa(s);

  std::vector<PrimOp<R>> ops;
  Mat<C> pending = pi.U;  // accumulate adjacent passive layers

  auto flush = [&]() {
    if (pending.size() > 0) {
      ops.push_back(PassiveUOp<R>{pending});
      pending.resize(0, 0);
    }
  };
  auto push_passive_real = [&](const Mat<R>& o) {
    Mat<C> w(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) w(i, j) = C(o(i, j), R(0));
    if (pending.size() > 0)
      pending = w * pending;
    else
      pending = w;
  };
  auto push_passive_diag = [&](const Vec<R>& angles) {
    Mat<C> w = Mat<C>::Zero(m, m);
    using std::cos;
    using std::sin;
    for (int i = 0; i < m; ++i) w(i, i) = C(cos(angles(i)), sin(angles(i)));
    if (pending.size() > 0)
      pending = w * pending;
    else
      pending = w;
  };

  // M block: L = Ao Sigma Bo^T from the symmetric eigenproblem of L^T L
  Mat<R> bo;
  Vec<R> sig2;
  factor_detail::jacobi_sym(Mat<R>(pi.L.transpose() * pi.L), bo, sig2);
  Vec<R> sig(m);
  for (int i = 0; i < m; ++i) {
    if (!(sig2(i) > R(0))) throw NumericalError("factor_gaussian: degenerate squeeze block");
    sig(i) = sqrt(sig2(i));
  }
  Mat<R> ao = pi.L * bo;
  for (int j = 0; j < m; ++j) ao.col(j) /= sig(j);

  push_passive_real(bo.transpose());
  flush();
  for (int i = 0; i < m; ++i)
    if (!(sig(i) == R(1))) ops.push_back(SqueezeOp<R>{i, -log(sig(i))});
  push_passive_real(ao);

  // N block: P = Q D Q^T, so [[I,0],[P,I]] conjugates per-mode shears by Q;
  // shears decompose as rot * squeeze * rot
  Mat<R> qm;
  Vec<R> diag;
  factor_detail::jacobi_sym(pi.P, qm, diag);
  push_passive_real(qm.transpose());
  // shear [[1,0],[t,1]] per mode
  Vec<R> betas(m), gammas(m);
  Vec<R> rs(m);
  bool any_shear = false;
  for (int i = 0; i < m; ++i) {
    if (diag(i) == R(0)) {
      betas(i) = R(0);
      gammas(i) = R(0);
      rs(i) = R(0);
      continue;
    }
    any_shear = true;
    Mat<R> sh(2, 2);
    sh(0, 0) = R(1);
    sh(0, 1) = R(0);
    sh(1, 0) = diag(i);
    sh(1, 1) = R(1);
    R gma, sv, bta;
    factor_detail::svd2(sh, gma, sv, bta);
    betas(i) = bta;
    gammas(i) = gma;
    rs(i) = -log(sv);
  }
  if (any_shear) {
    push_passive_diag(betas);
    flush();
    for (int i = 0; i < m; ++i)
      if (!(rs(i) == R(0))) ops.push_back(SqueezeOp<R>{i, rs(i)});
    push_passive_diag(gammas);
  }
  push_passive_real(qm);
  flush();

  Vec<C> delta(m);
  R rt2 = sqrt(R(2));
  bool any = false;
  for (int i = 0; i < m; ++i) {
    delta(i) = C(d(i) / rt2, d(m + i) / rt2);
    if (!(d(i) == R(0)) || !(d(m + i) == R(0))) any = true;
  }
  if (any) ops.push_back(DisplaceOp<R>{delta});
  return ops;
}

// Symplectic (S, d) realized by an op list; test/debug support.
template <typename R>
void symplectic_of_ops(const std::vector<PrimOp<R>>& ops, int m, Mat<R>& s_out, Vec<R>& d_out) {
  using std::exp;
  using std::sqrt;
  s_out = Mat<R>::Identity(2 * m, 2 * m);
  d_out = Vec<R>::Zero(2 * m);
  R rt2 = sqrt(R(2));
  for (const auto& op : ops) {
    Mat<R> s = Mat<R>::Identity(2 * m, 2 * m);
    Vec<R> d = Vec<R>::Zero(2 * m);
    if (std::holds_alternative<PassiveUOp<R>>(op)) {
      const auto& w = std::get<PassiveUOp<R>>(op).W;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          s(i, j) = w(i, j).real();
          s(i, m + j) = -w(i, j).imag();
          s(m + i, j) = w(i, j).imag();
          s(m + i, m + j) = w(i, j).real();
        }
    } else if (std::holds_alternative<SqueezeOp<R>>(op)) {
      const auto& sq = std::get<SqueezeOp<R>>(op);
      s(sq.mode, sq.mode) = exp(-sq.r);
      s(m + sq.mode, m + sq.mode) = exp(sq.r);
    } else {
      const auto& dp = std::get<DisplaceOp<R>>(op);
      for (int i = 0; i < m; ++i) {
        d(i) = rt2 * dp.delta(i).real();
        d(m + i) = rt2 * dp.delta(i).imag();
      }
    }
    s_out = s * s_out;
    d_out = s * d_out + d;
  }
}

}  // namespace cvsim
