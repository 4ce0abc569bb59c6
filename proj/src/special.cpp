#include "cvsim/numerics/special.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "cvsim/errors.hpp"

namespace cvsim {

hp::Complex hermite_poly(unsigned n, const hp::Complex& z) {
  hp::context_precision();  // configuration error if unset
  if (n > kHermiteMaxDegree)
    throw ResourceError("hermite_poly: degree above configured maximum");
  hp::Complex hm1(hp::Real(1), hp::Real(0));  // H_0
  if (n == 0) return hm1;
  hp::Complex h = hp::Real(2) * z;  // H_1
  for (unsigned k = 1; k < n; ++k) {
    hp::Complex next = hp::Real(2) * (z * h - hp::Real(k) * hm1);
    hm1 = std::move(h);
    h = std::move(next);
  }
  return h;
}

namespace {

struct GammaBase {
  hp::Real third;       // Gamma(1/3)
  hp::Real two_thirds;  // Gamma(2/3)
};

const GammaBase& gamma_base(hp::Precision p) {
  thread_local std::map<hp::Precision, GammaBase> cache;
  auto it = cache.find(p);
  if (it == cache.end()) {
    hp::Real one_third = hp::Real(1, p) / hp::Real(3, p);
    hp::Real two_third = hp::Real(2, p) / hp::Real(3, p);
    it = cache.emplace(p, GammaBase{hp::gamma(one_third), hp::gamma(two_third)}).first;
  }
  return it->second;
}

}  // namespace

hp::Real gamma_third(unsigned k, GammaThird offset) {
  hp::Precision p = hp::context_precision();
  const GammaBase& base = gamma_base(p);
  hp::Real r = (offset == GammaThird::OneThird) ? base.third : base.two_thirds;
  hp::Real off = (offset == GammaThird::OneThird) ? hp::Real(1, p) / hp::Real(3, p)
                                                  : hp::Real(2, p) / hp::Real(3, p);
  for (unsigned j = 0; j < k; ++j) r *= (hp::Real(j) + off);
  return r;
}

hp::Complex exp_hp(const hp::Complex& z, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("exp_hp: eps must be positive");
  hp::Precision ctx = std::max(hp::context_precision(), hp::precision_of(z));
  double az = hp::abs(z).to_double();
  double rez = z.real().to_double();
  long n_tail = static_cast<long>(std::ceil(std::abs(std::log2(eps)))) + 1;
  long n = std::max(static_cast<long>(std::ceil(2 * M_E * az)), n_tail);

  // series peaks near |z|^k/k! ~ e^{|z|}; cancellation eats |z| - Re z nats
  long guard = 64 + static_cast<long>(std::ceil(1.4427 * (az + std::max(0.0, az - rez)))) +
               static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 2)));
  hp::Precision work = ctx + guard;

  hp::ScopedPrecision scope(work);
  hp::Complex zw = hp::round_to(z, work);
  hp::Complex term(hp::Real(1), hp::Real(0));
  hp::Complex sum = term;
  for (long k = 1; k <= n; ++k) {
    term *= zw;
    term /= hp::Real(k);
    sum += term;
  }
  return hp::round_to(sum, ctx);
}

}  // namespace cvsim
