#ifndef CARNOT_BUMP_HPP
#define CARNOT_BUMP_HPP

#include "carnot/types.hpp"

namespace carnot {

/// Compactly supported C^(p-1) test function: the product over axes of
/// (1 - t^2)_+^p in coordinates scaled to the per-axis radius. p >= 3 keeps
/// the function and its gradient zero on the support boundary, which is all
/// the first-order weak forms here pair against.
struct BumpTest {
  Vec center;
  Vec radii;
  int p = 3;

  BumpTest(Vec c, Vec r, int p_ = 3);

  int dim() const { return static_cast<int>(center.size()); }
  Box support() const { return Box(center - radii, center + radii); }

  /// Per-axis factor and its x-derivative at physical coordinate x.
  double axis_factor(int a, double x) const;
  double axis_factor_deriv(int a, double x) const;

  double value(const Vec& w) const;
  Vec gradient(const Vec& w) const;

  /// Exact integral over R^d.
  double integral() const;
  /// Integral of (1 - t^2)^p over [-1, 1].
  static double profile_mass(int p);

  /// Seeded random bump whose support stays inside box.
  static BumpTest random_in(const Box& box, Rng& rng, double min_scale = 0.25,
                            double max_scale = 0.45, int p = 3);
};

/// Plateau cutoff for the slicing family: 1 on [-eps, eps], C^1 smoothstep
/// tails down to 0 on [-eps - eps^2, eps + eps^2], values in [0, 1].
struct PlateauBump {
  double eps;

  explicit PlateauBump(double e);

  double value(double z) const;
  double half_support() const { return eps + eps * eps; }
  /// Exact mass: 2 eps plus eps^2 from the two smoothstep tails.
  double mass() const { return 2.0 * eps + eps * eps; }
};

}  // namespace carnot

#endif
