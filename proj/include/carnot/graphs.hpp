#ifndef CARNOT_GRAPHS_HPP
#define CARNOT_GRAPHS_HPP

#include "carnot/algebra.hpp"
#include "carnot/free.hpp"
#include "carnot/scalar_field.hpp"
#include "carnot/types.hpp"

namespace carnot {

// The splitting is always the coordinate one: L = exp(span X_1) and
// W = {x_1 = 0}. A W-point is the compact vector (x_2..x_m, y*_1..y*_h)
// in R^(m+h-1); these helpers fix the slot layout once.
inline int w_axis_x(int ell) { return ell - 2; }                  // ell in 2..m
inline int w_axis_y(int m, int i) { return m + i - 2; }           // i in 1..h
inline int w_axis_pair(int m, int pos) { return (m - 1) + pos; }  // free verticals

/// Projection onto W: kills x_1 and corrects the verticals by
/// -1/2 sum_j b^(i)_{j1} x_j x_1, so that pi_w(p) . (x_1 e_1) = p.
Vec pi_w(const StepTwoAlgebra& A, const GroupPoint& p);

/// Projection onto L, the x_1 coordinate.
double pi_l(const GroupPoint& p);

/// W-point as a group point with x_1 = 0.
GroupPoint embed_w(const StepTwoAlgebra& A, const Vec& w);

/// Group product w . (x_1, 0, ..., 0).
GroupPoint w_mul_l(const StepTwoAlgebra& A, const Vec& w, double x1);

struct AffineMap {
  Mat A;
  Vec c;
  Vec operator()(const Vec& w) const { return A * w + c; }
};

/// P_q(w) = pi_w(q . w) in closed form; affine in w with unimodular linear
/// part dP_q.
Vec P_q(const StepTwoAlgebra& A, const GroupPoint& q, const Vec& w);
Mat dP_q(const StepTwoAlgebra& A, const GroupPoint& q);
AffineMap P_q_map(const StepTwoAlgebra& A, const GroupPoint& q);

/// f o P_{q^-1} on the box hull of P_q(dom f); evaluation re-checks the
/// preimage against dom f, so hull points outside the true translated
/// domain throw.
ScalarField pullback_P_q(const StepTwoAlgebra& A, const ScalarField& f, const GroupPoint& q);

/// Intrinsic translation phi_q(a) = q_1 + phi(P_{q^-1}(a)) on P_q(dom phi).
ScalarField translate_graph(const StepTwoAlgebra& A, const ScalarField& phi, const GroupPoint& q);

/// Graph map w . phi(w).
GroupPoint graph_map(const StepTwoAlgebra& A, const ScalarField& phi, const Vec& w);

/// pi restricted to W-points: free (x, y_(l,s)) to (x, y*_i = sum b^(i)_{ls} y_(l,s)).
Vec project_w(const StepTwoAlgebra& A, const Vec& free_w);

/// Lift psi = phi o pi on the free W, restricted to free_w_box.
ScalarField lift_graph(const StepTwoAlgebra& A, const ScalarField& phi, const Box& free_w_box);

// FreePoint <-> GroupPoint of the pair-basis presentation free_step_two(m).
GroupPoint to_group_point(const FreePoint& p);
FreePoint to_free_point(int m, const GroupPoint& p);

}  // namespace carnot

#endif
