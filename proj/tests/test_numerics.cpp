#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cvsim/numerics/airy.hpp"
#include "cvsim/numerics/error_budget.hpp"
#include "cvsim/numerics/special.hpp"
#include "cvsim/numerics/tree_sum.hpp"
#include "support/airy_oracle.hpp"
#include "support/gamma_oracle.hpp"

using namespace cvsim;

namespace {
constexpr hp::Precision P = 512;

double rel_diff(const hp::Complex& a, const hp::Complex& b) {
  double den = std::max(1e-300, hp::abs(b).to_double());
  return hp::abs(a - b).to_double() / den;
}
}  // namespace

TEST_CASE("hp round trip and precision rules") {
  hp::ScopedPrecision ctx(P);
  hp::Real a("0.1");
  CHECK(a.precision() == P);
  CHECK(hp::Real(a.to_string()) == a);
  hp::Complex z = hp::make_complex(-1.25, 3e-7);
  CHECK(hp::complex_from_string(hp::to_string(z)) == z);
  // equal-precision operands give that precision
  CHECK((a * a).precision() == P);
}

TEST_CASE("precision context unset is a configuration error") {
  CHECK_THROWS_AS(hermite_poly(3, hp::Complex()), hp::ConfigError);
}

TEST_CASE("hermite examples") {
  hp::ScopedPrecision ctx(P);
  CHECK(hp::abs(hermite_poly(0, hp::make_complex(12.3, -4)) - hp::make_complex(1, 0)).to_double() == 0.0);
  CHECK(rel_diff(hermite_poly(1, hp::make_complex(2, 0)), hp::make_complex(4, 0)) < 1e-120);
  CHECK(rel_diff(hermite_poly(3, hp::make_complex(2, 0)), hp::make_complex(40, 0)) < 1e-120);
}

TEST_CASE("hermite recurrence residual stays at rounding level") {
  hp::ScopedPrecision ctx(P);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(-5, 5);
  double tol = std::exp2(-(static_cast<double>(P) - 30));
  for (int trial = 0; trial < 100; ++trial) {
    hp::Complex z = hp::make_complex(u(rng), u(rng));
    unsigned n = 1 + rng() % 29;
    hp::Complex hn1 = hermite_poly(n + 1, z), hn = hermite_poly(n, z), hm = hermite_poly(n - 1, z);
    hp::Complex resid = hn1 - hp::Real(2) * z * hn + hp::Real(2) * hp::Real(n) * hm;
    double scale = std::max({hp::abs(hn1).to_double(), hp::abs(hn).to_double(), 1.0});
    CHECK(hp::abs(resid).to_double() <= tol * scale);
  }
}

TEST_CASE("gamma at thirds: recurrence and independent oracle") {
  hp::ScopedPrecision ctx(P);
  hp::Real g13 = gamma_third(0, GammaThird::OneThird);
  // first ten digits from the spec example value
  CHECK(g13.to_double() == doctest::Approx(2.6789385347).epsilon(1e-10));
  CHECK(rel_diff(hp::Complex(gamma_third(1, GammaThird::OneThird), hp::Real(0)),
                 hp::Complex(g13 / hp::Real(3), hp::Real(0))) < 1e-120);
  hp::Real expect2 = (hp::Real(4) / hp::Real(3)) * (hp::Real(1) / hp::Real(3)) * g13;
  CHECK(rel_diff(hp::Complex(gamma_third(2, GammaThird::OneThird), hp::Real(0)),
                 hp::Complex(expect2, hp::Real(0))) < 1e-120);

  // Spouge-approximation oracle, independent of mpfr_gamma
  hp::Real third = hp::Real(1) / hp::Real(3);
  hp::Real oracle13 = oracle::spouge_gamma(third);
  CHECK(hp::abs(g13 - oracle13).to_double() / g13.to_double() < 1e-60);
  hp::Real oracle23 = oracle::spouge_gamma(hp::Real(2) / hp::Real(3));
  CHECK(hp::abs(gamma_third(0, GammaThird::TwoThirds) - oracle23).to_double() < 1e-60);

  // reflection identity Gamma(1/3) Gamma(2/3) = 2 pi / sqrt(3)
  hp::Real prod = g13 * gamma_third(0, GammaThird::TwoThirds);
  hp::Real expect = hp::Real(2) * hp::Real::pi(P) / hp::sqrt(hp::Real(3));
  CHECK(hp::abs(prod - expect).to_double() < 1e-150);
}

TEST_CASE("exp_hp examples") {
  hp::ScopedPrecision ctx(P);
  CHECK(hp::abs(exp_hp(hp::Complex(), 1e-30) - hp::make_complex(1, 0)).to_double() == 0.0);

  hp::Complex ipi(hp::Real(0), hp::Real::pi(P));
  CHECK(hp::abs(exp_hp(ipi, 1e-40) - hp::make_complex(-1, 0)).to_double() < 1e-40);

  hp::Complex e = exp_hp(hp::make_complex(1, 0), 1e-50);
  hp::Real e_oracle = hp::exp(hp::Real(1));  // mpfr's own exp as the constant oracle
  CHECK(hp::abs(e.real() - e_oracle).to_double() < 1e-50);
}

TEST_CASE("exp_hp inverse product invariant") {
  hp::ScopedPrecision ctx(P);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-8, 8);
  for (int trial = 0; trial < 25; ++trial) {
    hp::Complex z = hp::make_complex(u(rng), u(rng));
    double eps = 1e-30;
    hp::Complex prod = exp_hp(z, eps) * exp_hp(-z, eps);
    double slack = 3 * eps * std::exp(std::abs(z.real().to_double()));
    CHECK(hp::abs(prod - hp::make_complex(1, 0)).to_double() <= slack);
  }
}

TEST_CASE("airy derivative at zero matches the closed forms") {
  hp::ScopedPrecision ctx(P);
  auto r0 = airy_derivative(0, hp::Complex(), 1e-30);
  CHECK(hp::abs(r0.value - hp::Complex(airy_at_zero(), hp::Real(0))).to_double() < 1e-100);
  auto r1 = airy_derivative(1, hp::Complex(), 1e-30);
  CHECK(hp::abs(r1.value - hp::Complex(airy_prime_at_zero(), hp::Real(0))).to_double() < 1e-100);
  CHECK(airy_at_zero().to_double() == doctest::Approx(0.35502805388781723926).epsilon(1e-14));
  CHECK(airy_prime_at_zero().to_double() == doctest::Approx(-0.25881940379280679841).epsilon(1e-14));
}

TEST_CASE("airy value at w=1 against the contour oracle") {
  hp::ScopedPrecision ctx(P);
  auto r = airy_derivative(0, hp::make_complex(1, 0), 1e-14);
  auto o = oracle::airy_deriv(0, {1.0, 0.0});
  CHECK(std::abs(hp::to_cd(r.value) - o) < 1e-12);
  CHECK(r.value.real().to_double() == doctest::Approx(0.13529241631288141).epsilon(1e-12));
}

TEST_CASE("airy returned bound dominates the oracle error") {
  hp::ScopedPrecision ctx(P);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_int_distribution<unsigned> ud(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned ell = ud(rng);
    std::complex<double> wz(u(rng), u(rng));
    hp::Complex w = hp::make_complex(wz.real(), wz.imag());
    double eps = 1e-12;
    auto r = airy_derivative(ell, w, eps);
    CHECK(r.bound <= eps);
    auto o = oracle::airy_deriv(ell, wz);
    // oracle noise scales with the value's magnitude (double conversion floor)
    double oracle_noise = 2e-13 + 1e-15 * std::abs(o);
    CHECK(std::abs(hp::to_cd(r.value) - o) <= r.bound + oracle_noise);
  }
}

TEST_CASE("airy depth cap raises with best achievable bound") {
  hp::ScopedPrecision ctx(P);
  CHECK_THROWS_AS(airy_derivative(0, hp::make_complex(40, 0), 1e-10, 1000), ResourceError);
}

TEST_CASE("tree_sum base cases and fold agreement") {
  hp::ScopedPrecision ctx(P);
  std::vector<hp::Complex> empty;
  CHECK(hp::abs(tree_sum(empty)).to_double() == 0.0);
  std::vector<hp::Complex> one{hp::make_complex(2.5, -1)};
  CHECK(tree_sum(one) == one[0]);

  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<hp::Complex> terms;
  terms.reserve(10000);
  for (int i = 0; i < 10000; ++i) terms.push_back(hp::make_complex(u(rng), u(rng)));
  hp::Complex fold;
  for (const auto& t : terms) fold += t;
  CHECK(rel_diff(tree_sum(terms), fold) < std::exp2(-(static_cast<double>(P) - 20)));

  // permutation sensitivity only at rounding level
  std::vector<hp::Complex> shuffled = terms;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(rel_diff(tree_sum(shuffled), tree_sum(terms)) < std::exp2(-(static_cast<double>(P) - 30)));

  // bitwise identical across worker counts
  set_worker_count(1);
  hp::Complex s1 = tree_sum(terms);
  set_worker_count(4);
  hp::Complex s4 = tree_sum(terms);
  set_worker_count(1);
  CHECK(s1 == s4);
}

TEST_CASE("error budget ledger") {
  ErrorBudget b(0.1);
  b.charge("stage-1", 0.05);
  b.charge("stage-2", 0.04);
  CHECK(b.consumed() == doctest::Approx(0.09));
  CHECK_THROWS_AS(b.charge("stage-3", 0.02), BudgetError);
  CHECK(b.ledger().size() == 2);
}
