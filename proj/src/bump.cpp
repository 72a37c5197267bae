#include "carnot/bump.hpp"

#include <cmath>

namespace carnot {

namespace {

double ipow(double x, int n) {
  double out = 1.0;
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

}  // namespace

BumpTest::BumpTest(Vec c, Vec r, int p_) : center(std::move(c)), radii(std::move(r)), p(p_) {
  if (center.size() != radii.size()) throw std::invalid_argument("BumpTest: center/radii mismatch");
  if (p < 3) throw std::invalid_argument("BumpTest: smoothness exponent must be >= 3");
  for (int a = 0; a < radii.size(); ++a)
    if (!(radii[a] > 0.0)) throw std::invalid_argument("BumpTest: radii must be positive");
}

double BumpTest::axis_factor(int a, double x) const {
  const double t = (x - center[a]) / radii[a];
  const double u = 1.0 - t * t;
  return u > 0.0 ? ipow(u, p) : 0.0;
}

double BumpTest::axis_factor_deriv(int a, double x) const {
  const double t = (x - center[a]) / radii[a];
  const double u = 1.0 - t * t;
  return u > 0.0 ? -2.0 * p * t * ipow(u, p - 1) / radii[a] : 0.0;
}

double BumpTest::value(const Vec& w) const {
  double v = 1.0;
  for (int a = 0; a < dim() && v != 0.0; ++a) v *= axis_factor(a, w[a]);
  return v;
}

Vec BumpTest::gradient(const Vec& w) const {
  const int d = dim();
  Vec vals(d);
  for (int a = 0; a < d; ++a) vals[a] = axis_factor(a, w[a]);
  Vec g(d);
  for (int a = 0; a < d; ++a) {
    double prod = axis_factor_deriv(a, w[a]);
    for (int b = 0; b < d && prod != 0.0; ++b)
      if (b != a) prod *= vals[b];
    g[a] = prod;
  }
  return g;
}

double BumpTest::profile_mass(int p) {
  // int_{-1}^{1} (1-t^2)^p dt = 2 sum_k binom(p,k) (-1)^k / (2k+1)
  double sum = 0.0, binom = 1.0;
  for (int k = 0; k <= p; ++k) {
    sum += (k % 2 == 0 ? 1.0 : -1.0) * binom / (2 * k + 1);
    binom = binom * (p - k) / (k + 1);
  }
  return 2.0 * sum;
}

double BumpTest::integral() const {
  double v = 1.0;
  for (int a = 0; a < dim(); ++a) v *= radii[a] * profile_mass(p);
  return v;
}

BumpTest BumpTest::random_in(const Box& box, Rng& rng, double min_scale, double max_scale, int p) {
  const int d = box.dim();
  Vec r(d), c(d);
  for (int a = 0; a < d; ++a) {
    const double half = 0.5 * (box.hi[a] - box.lo[a]);
    r[a] = half * rng.uniform(min_scale, max_scale);
    c[a] = rng.uniform(box.lo[a] + r[a], box.hi[a] - r[a]);
  }
  return BumpTest(std::move(c), std::move(r), p);
}

PlateauBump::PlateauBump(double e) : eps(e) {
  if (!(eps > 0.0)) throw std::invalid_argument("PlateauBump: eps must be positive");
}

double PlateauBump::value(double z) const {
  const double a = std::abs(z);
  if (a <= eps) return 1.0;
  const double edge = eps + eps * eps;
  if (a >= edge) return 0.0;
  const double u = (a - eps) / (eps * eps);
  return 1.0 - u * u * (3.0 - 2.0 * u);
}

}  // namespace carnot
