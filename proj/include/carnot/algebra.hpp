#ifndef CARNOT_ALGEBRA_HPP
#define CARNOT_ALGEBRA_HPP

#include "carnot/types.hpp"

#include "json.hpp"

#include <vector>

namespace carnot {

/// Point of a step-2 group in exponential coordinates of the first kind:
/// m horizontal coordinates x and h vertical coordinates y*.
struct GroupPoint {
  Vec x;
  Vec ystar;
};

/// A step-2 stratified group of rank m in exponential coordinates.
///
/// The structure is carried entirely by h skew-symmetric m-by-m matrices
/// B^(1)..B^(h): the product of q = (x, y*) and q' = (x', y*') is
///
///   q . q' = (x + x', y* + y*' - 1/2 <B x, x'>),  <B x, x'>_i = (B^(i) x) . x',
///
/// and the adapted frame satisfies [X_j, X_l] = sum_i b^(i)_{jl} Y_i.
/// Generator indices in this API are 1-based to match that convention:
/// horizontal j, l in 1..m, vertical i in 1..h.
class StepTwoAlgebra {
 public:
  StepTwoAlgebra(int m, std::vector<Mat> structure_matrices);

  int rank() const { return m_; }
  int vertical_dim() const { return h_; }
  int dim() const { return m_ + h_; }
  int w_dim() const { return m_ + h_ - 1; }

  const Mat& structure_matrix(int i) const { return B_.at(i - 1); }
  const std::vector<Mat>& structure_matrices() const { return B_; }

  /// Structure coefficient b^(i)_{jl}; all indices 1-based.
  double b(int i, int j, int l) const { return B_[i - 1](j - 1, l - 1); }

  GroupPoint identity() const;
  GroupPoint point(Vec x, Vec ystar) const;

  nlohmann::json to_json() const;
  static StepTwoAlgebra from_json(const nlohmann::json& j);

  /// First Heisenberg group: m = 2, h = 1, b_12 = 1.
  static StepTwoAlgebra heisenberg();
  /// Rank-3 group of dimension 5 whose only nonvanishing commutators are
  /// [X1,X2] = Y1 + Y2 and [X1,X3] = Y1 - Y2.
  static StepTwoAlgebra rank3_dim5();
  /// The free step-2 group of rank m presented through its pair basis
  /// Y_(l,s) = [X_l, X_s], so h = m(m-1)/2.
  static StepTwoAlgebra free_step_two(int m);

 private:
  int m_;
  int h_;
  std::vector<Mat> B_;
};

GroupPoint group_mul(const StepTwoAlgebra& A, const GroupPoint& p, const GroupPoint& q);
GroupPoint group_inv(const StepTwoAlgebra& A, const GroupPoint& p);
GroupPoint dilate(const StepTwoAlgebra& A, double lambda, const GroupPoint& p);

/// max(|x|_2, |y*|_2^(1/2)); homogeneous of degree 1 under dilations and
/// symmetric under inversion. Satisfies the triangle inequality only up to
/// a constant, which is all the ball bookkeeping here needs.
double hom_norm(const StepTwoAlgebra& A, const GroupPoint& p);

/// Coefficient rows of the left-invariant adapted frame at p: rows 1..m are
/// X_j = d_xj - 1/2 sum_i sum_l b^(i)_{jl} x_l d_y*i, rows m+1..m+h are Y_i.
Mat left_invariant_frame(const StepTwoAlgebra& A, const GroupPoint& p);

}  // namespace carnot

#endif
