#ifndef CARNOT_FIELDS_HPP
#define CARNOT_FIELDS_HPP

#include "carnot/algebra.hpp"
#include "carnot/scalar_field.hpp"
#include "carnot/types.hpp"

namespace carnot {

/// D^phi_j on the W of a step-2 group: unit speed in x_j and
/// -(b^(i)_{j1} phi + 1/2 sum_{k>=2} x_k b^(i)_{jk}) on each vertical slot.
struct ProjectedFieldG {
  StepTwoAlgebra algebra;
  ScalarField phi;
  int j;  // 2..m

  ProjectedFieldG(StepTwoAlgebra a, ScalarField f, int j_);
};

Vec eval_D_G(const ProjectedFieldG& F, const Vec& w);

/// D^psi_j on the free W of rank m: unit in x_j, -psi on y_(j,1),
/// +x_l/2 on y_(l,j) for l > j and -x_s/2 on y_(j,s) for 1 < s < j.
struct ProjectedFieldF {
  int m;
  ScalarField psi;
  int j;  // 2..m

  ProjectedFieldF(int m_, ScalarField f, int j_);
};

Vec eval_D_F(const ProjectedFieldF& F, const Vec& w);

/// The two horizontal projected fields of the Engel group on its
/// three-dimensional W with coordinates (x2, x3, x4). These are hard-coded:
/// the group has step 3 and sits outside the step-2 engine.
enum class EngelGenerator { X2, X3 };

struct EngelField {
  ScalarField phi;  // on a 3-d box
  EngelGenerator which;

  EngelField(ScalarField f, EngelGenerator g);
};

/// D^phi_{X2} = d_2 + phi d_3 + (phi^2/2) d_4,  D^phi_{X3} = d_3 + phi d_4.
Vec eval_D_engel(const EngelField& F, const Vec& w);

}  // namespace carnot

#endif
