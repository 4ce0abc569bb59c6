#pragma once

// Double-precision composite Gauss-Legendre quadrature, test oracle use only.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

struct GaussLegendre {
  std::vector<long double> x, w;  // nodes/weights on [-1, 1]

  explicit GaussLegendre(int n) : x(n), w(n) {
    for (int i = 0; i < n; ++i) {
      long double t = std::cos((long double)M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1.0L, p1 = 0.0L;
        for (int j = 0; j < n; ++j) {
          long double p2 = p1;
          p1 = p0;
          p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
        }
        long double dp = n * (t * p0 - p1) / (t * t - 1.0L);
        long double dt = p0 / dp;
        t -= dt;
        if (std::abs((double)dt) < 1e-19) break;
      }
      long double p0 = 1.0L, p1 = 0.0L;
      for (int j = 0; j < n; ++j) {
        long double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      long double dp = n * (t * p0 - p1) / (t * t - 1.0L);
      x[i] = t;
      w[i] = 2.0L / ((1.0L - t * t) * dp * dp);
    }
  }
};

inline const GaussLegendre& gl32() {
  static GaussLegendre g(32);
  return g;
}

using cld = std::complex<long double>;

inline cld integrate(const std::function<cld(long double)>& f, long double a, long double b,
                     int panels) {
  const auto& g = gl32();
  cld acc = 0;
  long double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    long double lo = a + p * h;
    long double c = lo + h / 2, r = h / 2;
    for (size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * r * f(c + r * g.x[i]);
  }
  return acc;
}

}  // namespace oracle
