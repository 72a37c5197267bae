#include "carnot/fields.hpp"

#include "carnot/free.hpp"
#include "carnot/graphs.hpp"

namespace carnot {

ProjectedFieldG::ProjectedFieldG(StepTwoAlgebra a, ScalarField f, int j_)
    : algebra(std::move(a)), phi(std::move(f)), j(j_) {
  if (j < 2 || j > algebra.rank())
    throw std::invalid_argument("ProjectedFieldG: j must lie in 2..m");
  if (phi.dim() != algebra.w_dim())
    throw std::invalid_argument("ProjectedFieldG: phi does not live on W");
}

Vec eval_D_G(const ProjectedFieldG& F, const Vec& w) {
  const StepTwoAlgebra& A = F.algebra;
  const int m = A.rank(), h = A.vertical_dim();
  const double phi = F.phi(w);
  Vec v = Vec::Zero(A.w_dim());
  v[w_axis_x(F.j)] = 1.0;
  for (int i = 1; i <= h; ++i) {
    double drift = 0.0;
    for (int k = 2; k <= m; ++k) drift += w[w_axis_x(k)] * A.b(i, F.j, k);
    v[w_axis_y(m, i)] = -(A.b(i, F.j, 1) * phi + 0.5 * drift);
  }
  return v;
}

ProjectedFieldF::ProjectedFieldF(int m_, ScalarField f, int j_)
    : m(m_), psi(std::move(f)), j(j_) {
  if (j < 2 || j > m) throw std::invalid_argument("ProjectedFieldF: j must lie in 2..m");
  if (psi.dim() != (m - 1) + pair_count(m))
    throw std::invalid_argument("ProjectedFieldF: psi does not live on the free W");
}

Vec eval_D_F(const ProjectedFieldF& F, const Vec& w) {
  const int m = F.m;
  const double psi = F.psi(w);
  Vec v = Vec::Zero((m - 1) + pair_count(m));
  v[w_axis_x(F.j)] = 1.0;
  v[w_axis_pair(m, pair_pos(F.j, 1, m))] = -psi;
  for (int ell = F.j + 1; ell <= m; ++ell)
    v[w_axis_pair(m, pair_pos(ell, F.j, m))] = 0.5 * w[w_axis_x(ell)];
  for (int s = 2; s < F.j; ++s)
    v[w_axis_pair(m, pair_pos(F.j, s, m))] = -0.5 * w[w_axis_x(s)];
  return v;
}

EngelField::EngelField(ScalarField f, EngelGenerator g) : phi(std::move(f)), which(g) {
  if (phi.dim() != 3) throw std::invalid_argument("EngelField: phi must live on (x2, x3, x4)");
}

Vec eval_D_engel(const EngelField& F, const Vec& w) {
  const double phi = F.phi(w);
  Vec v(3);
  if (F.which == EngelGenerator::X2)
    v << 1.0, phi, 0.5 * phi * phi;
  else
    v << 0.0, 1.0, phi;
  return v;
}

}  // namespace carnot
