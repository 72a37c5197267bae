#ifndef CARNOT_FREE_HPP
#define CARNOT_FREE_HPP

#include "carnot/algebra.hpp"
#include "carnot/types.hpp"

#include "json.hpp"

#include <string>

namespace carnot {

/// Ordered generator pair (l, s) with 1 <= s < l <= m, labelling the free
/// vertical coordinate y_(l,s) with [X_l, X_s] = Y_(l,s).
struct PairIndex {
  int ell;
  int s;
};

/// Number of vertical coordinates of the free step-2 group of rank m.
inline int pair_count(int m) { return m * (m - 1) / 2; }

/// Linear position of (l, s) under the lexicographic enumeration
/// (2,1), (3,1), (3,2), (4,1), ... — the one fixed convention every free
/// coordinate in this library follows.
int pair_pos(int ell, int s, int m);
PairIndex pair_at(int pos, int m);

/// Point of the free step-2 group of rank m: x in R^m and one vertical
/// coordinate per ordered pair, in pair_pos order.
struct FreePoint {
  Vec x;
  Vec y;

  int rank() const { return static_cast<int>(x.size()); }
  nlohmann::json to_json() const;
  static FreePoint from_json(const nlohmann::json& j);
};

FreePoint free_identity(int m);
FreePoint free_mul(const FreePoint& p, const FreePoint& q);
FreePoint free_inv(const FreePoint& p);
FreePoint free_dilate(double lambda, const FreePoint& p);

/// Frame rows at p: rows 1..m carry
/// X_j = d_xj + 1/2 sum_{j<l} x_l d_y(l,j) - 1/2 sum_{s<j} x_s d_y(j,s),
/// the remaining rows are the coordinate fields Y_(l,s).
Mat free_frame(int m, const FreePoint& p);

/// The quotient homomorphism onto the step-2 group described by A:
/// x is preserved and y*_i = sum_{s<l} b^(i)_{ls} y_(l,s).
GroupPoint project_pi(const StepTwoAlgebra& A, const FreePoint& p);

/// Invertible change-of-variables matrix of order m-1 + m(m-1)/2: identity
/// block on the horizontal slots, then the h rows of flattened structure
/// coefficients (b^(i)_{ls}) in pair order, completed by an orthonormal
/// basis of the orthogonal complement of their span.
Mat complete_matrix_M(const StepTwoAlgebra& A);

void write_matrix_csv(const Mat& M, const std::string& path);

}  // namespace carnot

#endif
