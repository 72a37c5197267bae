#ifndef CARNOT_QUADRATURE_HPP
#define CARNOT_QUADRATURE_HPP

#include "carnot/bump.hpp"
#include "carnot/graphs.hpp"
#include "carnot/scalar_field.hpp"
#include "carnot/types.hpp"

#include <functional>
#include <vector>

namespace carnot {

/// Composite midpoint tensor rule, fixed iteration order (results are
/// deterministic). Either one shared node count or one per axis.
double tensor_midpoint(const Box& box, int level, const std::function<double(const Vec&)>& f);
double tensor_midpoint(const Box& box, const std::vector<int>& levels,
                       const std::function<double(const Vec&)>& f);

/// One addend of a first-order weak form: coef times the test function
/// differentiated along `axis` (-1 pairs against the test itself).
struct WeakTerm {
  ScalarField coef;
  int axis;
};

/// Midpoint quadrature of sum_t coef_t * d_axis_t (xi o pre) over the
/// support of the composed test (pre == nullptr means the identity).
///
/// When every coefficient declares its axis dependence and the linear part
/// of pre is the identity plus a block with disjoint row/column sets (the
/// shape every dP_q has), the tensor sum is factored axis by axis; the
/// result is the same midpoint sum, just reassociated, and the cost drops
/// from level^d to level^|S| for the small set S of coupled axes.
double weak_form_integral(const std::vector<WeakTerm>& terms, const BumpTest& xi,
                          const AffineMap* pre, int level);

/// Same integral, forced down the generic point-by-point loop. Exposed so
/// tests can pin the factored path against it.
double weak_form_integral_generic(const std::vector<WeakTerm>& terms, const BumpTest& xi,
                                  const AffineMap* pre, int level);

}  // namespace carnot

#endif
