#include "cvsim/numerics/airy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cvsim/errors.hpp"
#include "cvsim/numerics/special.hpp"

namespace cvsim {

namespace {

constexpr double kLog2E = 1.4426950408889634;

double log2_gamma(double x) { return std::lgamma(x) * kLog2E; }

// log2 of the paper tail bound at depth d; -inf when |w| = 0 and 3d > ell.
double log2_paper_bound(unsigned ell, double aw, long d) {
  double dd = static_cast<double>(d);
  if (!(2 * dd > 3 * aw * aw * aw)) return std::numeric_limits<double>::infinity();
  double front = (1 + aw / (2 * dd)) / (1 - 3 * aw * aw * aw / (2 * dd));
  if (aw == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(front) + (3.0 * dd - ell) * std::log2(aw) - dd * std::log2(2 * dd / 3.0);
}

// log2 of first omitted term of the 1/3-series (c = 1/3) or 2/3-series.
double log2_tail_term(unsigned ell, double aw, long d, double c) {
  double dd = static_cast<double>(d);
  long shift = (c < 0.5) ? 0 : 1;  // power is 3k-ell for f, 3k+1-ell for g
  double p = 3.0 * dd + shift - ell;
  if (p < 0) return -std::numeric_limits<double>::infinity();
  double lw = (aw == 0.0) ? -std::numeric_limits<double>::infinity() : std::log2(aw);
  return dd * std::log2(3.0) + log2_gamma(dd + c) + (p == 0 ? 0.0 : p * lw) - log2_gamma(p + 1);
}

// Rigorous upper bound on the log2 of the actual combined tail from depth d,
// valid once successive term ratios are <= 1/2 (enforced by the caller via
// d >= max(ell+1, |w|^{3/2})): tail <= 2 * (cf*t_f(d) + cg*t_g(d)).
double log2_true_tail(unsigned ell, double aw, long d) {
  const double cf = 0.1325;   // Ai(0)/Gamma(1/3), rounded up
  const double cg = 0.19116;  // |Ai'(0)|/Gamma(2/3), rounded up
  double tf = log2_tail_term(ell, aw, d, 1.0 / 3.0) + std::log2(cf);
  double tg = log2_tail_term(ell, aw, d, 2.0 / 3.0) + std::log2(cg);
  double hi = std::max(tf, tg), lo = std::min(tf, tg);
  if (hi == -std::numeric_limits<double>::infinity()) return hi;
  return 1.0 + hi + std::log2(1.0 + std::exp2(lo - hi));
}

bool depth_admissible(unsigned ell, double aw, long d, double log2_eps) {
  double b = log2_paper_bound(ell, aw, d);
  return b <= log2_eps && log2_true_tail(ell, aw, d) <= b;
}

hp::Complex cpow_uint(const hp::Complex& z, unsigned long e) {
  hp::Complex r(hp::Real(1), hp::Real(0));
  hp::Complex base = z;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Sum_{k=k0}^{d-1} 3^k Gamma(k+c) w^{3k+shift-ell} / (3k+shift-ell)! for
// c in {1/3, 2/3}, shift in {0, 1}. Terms advance by an exact ratio.
hp::Complex series_sum(unsigned ell, const hp::Complex& w, long k0, long d,
                       GammaThird offset, long shift, double* max_log2_term) {
  long p0 = 3 * k0 + shift - ell;
  hp::Real c_num = (offset == GammaThird::OneThird) ? hp::Real(1) / hp::Real(3)
                                                    : hp::Real(2) / hp::Real(3);
  hp::Complex w3 = w * w * w;
  hp::Complex term = cpow_uint(w, static_cast<unsigned long>(p0));
  term *= gamma_third(static_cast<unsigned>(k0), offset);
  term /= hp::factorial(static_cast<unsigned long>(p0), hp::context_precision());
  hp::Real three_k(hp::Prec{hp::context_precision()});
  mpfr_ui_pow_ui(three_k.raw(), 3, static_cast<unsigned long>(k0), MPFR_RNDN);
  term *= three_k;
  hp::Complex sum = term;
  *max_log2_term = hp::log2_magnitude(term);
  for (long k = k0; k + 1 < d; ++k) {
    long p = 3 * k + shift - ell;
    hp::Complex ratio = w3;
    ratio *= (hp::Real(3) * (hp::Real(k) + c_num));
    ratio /= (hp::Real(p + 1) * hp::Real(p + 2) * hp::Real(p + 3));
    term *= ratio;
    sum += term;
    double l2 = hp::log2_magnitude(term);
    if (l2 > *max_log2_term) *max_log2_term = l2;
  }
  return sum;
}

}  // namespace

hp::Real airy_at_zero() {
  hp::Real p3(hp::Prec{hp::context_precision()});
  mpfr_set_ui(p3.raw(), 3, MPFR_RNDN);
  return hp::pow(p3, hp::Real(-2) / hp::Real(3)) / gamma_third(0, GammaThird::TwoThirds);
}

hp::Real airy_prime_at_zero() {
  hp::Real p3(hp::Prec{hp::context_precision()});
  mpfr_set_ui(p3.raw(), 3, MPFR_RNDN);
  return -hp::pow(p3, hp::Real(-1) / hp::Real(3)) / gamma_third(0, GammaThird::OneThird);
}

AiryResult airy_derivative(unsigned ell, const hp::Complex& w, double eps, long depth_cap) {
  if (!(eps > 0)) throw std::invalid_argument("airy_derivative: eps must be positive");
  hp::Precision ctx = std::max(hp::context_precision(), hp::precision_of(w));
  double aw = hp::abs(w).to_double();
  double log2_eps = std::log2(eps);

  long kf = (ell + 2) / 3;                        // ceil(ell/3)
  long kg = ell == 0 ? 0 : (ell - 1 + 2) / 3;     // ceil((ell-1)/3)
  long d_min = std::max<long>({kf + 1, kg + 1, static_cast<long>(ell) + 1,
                               static_cast<long>(std::ceil(std::pow(aw, 1.5))) + 1,
                               static_cast<long>(std::floor(1.5 * aw * aw * aw)) + 1});

  long d = -1;
  if (depth_admissible(ell, aw, d_min, log2_eps)) {
    d = d_min;
  } else {
    long lo = d_min, hi = d_min;
    while (hi < depth_cap) {
      hi = std::min(depth_cap, hi * 2 + 8);
      if (depth_admissible(ell, aw, hi, log2_eps)) break;
    }
    if (!depth_admissible(ell, aw, hi, log2_eps)) {
      double best = std::exp2(std::max(log2_paper_bound(ell, aw, hi), -1020.0));
      throw ResourceError("airy_derivative: depth exhausted at cap " + std::to_string(depth_cap) +
                              ", best achievable bound " + std::to_string(best),
                          best);
    }
    while (lo + 1 < hi) {
      long mid = lo + (hi - lo) / 2;
      if (depth_admissible(ell, aw, mid, log2_eps))
        hi = mid;
      else
        lo = mid;
    }
    d = hi;
  }

  // series peak ~ (2/3)|w|^{3/2} in nats plus low-k Gamma weight
  double peak_est = kLog2E * (2.0 / 3.0) * std::pow(aw, 1.5) + log2_gamma(kf + 1.0) + 16;
  long guard = static_cast<long>(std::ceil(std::max(0.0, peak_est) - log2_eps)) + 64 +
               static_cast<long>(std::ceil(std::log2(static_cast<double>(d) + 2)));

  for (int attempt = 0; attempt < 3; ++attempt) {
    hp::Precision work = ctx + guard;
    hp::ScopedPrecision scope(work);
    hp::Complex ww = hp::round_to(w, work);
    double peak_f = 0, peak_g = 0;
    hp::Complex f_sum = series_sum(ell, ww, kf, d, GammaThird::OneThird, 0, &peak_f);
    hp::Complex g_sum = series_sum(ell, ww, kg, d, GammaThird::TwoThirds, 1, &peak_g);
    double peak = std::max(peak_f, peak_g);
    if (peak - log2_eps + 48 > static_cast<double>(work)) {
      guard = static_cast<long>(std::ceil(peak - log2_eps)) + 128;
      continue;
    }
    hp::Real ai0 = airy_at_zero();
    hp::Real aip0 = airy_prime_at_zero();
    hp::Complex value = ai0 * (f_sum / gamma_third(0, GammaThird::OneThird)) +
                        aip0 * (g_sum / gamma_third(0, GammaThird::TwoThirds));
    double bound = std::exp2(std::max(log2_paper_bound(ell, aw, d), -1020.0));
    return AiryResult{hp::round_to(value, ctx), bound, d};
  }
  throw NumericalError("airy_derivative: could not establish working precision");
}

}  // namespace cvsim
