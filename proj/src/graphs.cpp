#include "carnot/graphs.hpp"

#include <algorithm>
#include <cmath>

namespace carnot {

Vec pi_w(const StepTwoAlgebra& A, const GroupPoint& p) {
  const int m = A.rank(), h = A.vertical_dim();
  Vec w(A.w_dim());
  for (int ell = 2; ell <= m; ++ell) w[w_axis_x(ell)] = p.x[ell - 1];
  for (int i = 1; i <= h; ++i) {
    double corr = 0.0;
    for (int j = 1; j <= m; ++j) corr += A.b(i, j, 1) * p.x[j - 1];
    w[w_axis_y(m, i)] = p.ystar[i - 1] - 0.5 * corr * p.x[0];
  }
  return w;
}

double pi_l(const GroupPoint& p) { return p.x[0]; }

GroupPoint embed_w(const StepTwoAlgebra& A, const Vec& w) {
  const int m = A.rank(), h = A.vertical_dim();
  if (w.size() != A.w_dim()) throw std::invalid_argument("embed_w: wrong W dimension");
  GroupPoint p{Vec::Zero(m), Vec(h)};
  for (int ell = 2; ell <= m; ++ell) p.x[ell - 1] = w[w_axis_x(ell)];
  for (int i = 1; i <= h; ++i) p.ystar[i - 1] = w[w_axis_y(m, i)];
  return p;
}

GroupPoint w_mul_l(const StepTwoAlgebra& A, const Vec& w, double x1) {
  GroupPoint l = A.identity();
  l.x[0] = x1;
  return group_mul(A, embed_w(A, w), l);
}

Vec P_q(const StepTwoAlgebra& A, const GroupPoint& q, const Vec& w) {
  const int m = A.rank(), h = A.vertical_dim();
  if (w.size() != A.w_dim()) throw std::invalid_argument("P_q: wrong W dimension");
  Vec out(A.w_dim());
  for (int ell = 2; ell <= m; ++ell) out[w_axis_x(ell)] = q.x[ell - 1] + w[w_axis_x(ell)];
  const double q1 = q.x[0];
  for (int i = 1; i <= h; ++i) {
    double v = q.ystar[i - 1] + w[w_axis_y(m, i)];
    for (int ell = 2; ell <= m; ++ell) {
      double coef = A.b(i, 1, ell) * q1;
      for (int j = 2; j <= m; ++j) coef += 0.5 * A.b(i, j, ell) * q.x[j - 1];
      v += coef * w[w_axis_x(ell)];
      v -= 0.5 * A.b(i, ell, 1) * q.x[ell - 1] * q1;
    }
    out[w_axis_y(m, i)] = v;
  }
  return out;
}

Mat dP_q(const StepTwoAlgebra& A, const GroupPoint& q) {
  const int m = A.rank(), h = A.vertical_dim();
  Mat D = Mat::Identity(A.w_dim(), A.w_dim());
  for (int i = 1; i <= h; ++i)
    for (int ell = 2; ell <= m; ++ell) {
      double coef = A.b(i, 1, ell) * q.x[0];
      for (int j = 2; j <= m; ++j) coef += 0.5 * A.b(i, j, ell) * q.x[j - 1];
      D(w_axis_y(m, i), w_axis_x(ell)) = coef;
    }
  return D;
}

AffineMap P_q_map(const StepTwoAlgebra& A, const GroupPoint& q) {
  return {dP_q(A, q), P_q(A, q, Vec::Zero(A.w_dim()))};
}

namespace {

ScalarField pullback_with_offset(const StepTwoAlgebra& A, const ScalarField& f,
                                 const GroupPoint& q, double offset) {
  if (f.dim() != A.w_dim())
    throw std::invalid_argument("pullback_P_q: field does not live on W");
  const AffineMap fwd = P_q_map(A, q);
  const AffineMap bwd = P_q_map(A, group_inv(A, q));

  // Domain: box hull of the affine image of dom(f).
  const Box& dom = f.domain();
  const int d = dom.dim();
  Vec lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  Vec hi = -lo;
  Vec corner(d);
  for (int mask = 0; mask < (1 << d); ++mask) {
    for (int a = 0; a < d; ++a) corner[a] = (mask >> a) & 1 ? dom.hi[a] : dom.lo[a];
    const Vec img = fwd(corner);
    lo = lo.cwiseMin(img);
    hi = hi.cwiseMax(img);
  }

  std::optional<std::vector<int>> deps;
  if (f.deps()) {
    std::vector<int> out;
    for (int k = 0; k < d; ++k)
      for (int r : *f.deps())
        if (bwd.A(r, k) != 0.0) {
          out.push_back(k);
          break;
        }
    deps = std::move(out);
  }
  ScalarField base = f;
  return ScalarField::closed_form(
      Box(lo, hi), [base, bwd, offset](const Vec& a) { return offset + base(bwd(a)); },
      std::move(deps));
}

}  // namespace

ScalarField pullback_P_q(const StepTwoAlgebra& A, const ScalarField& f, const GroupPoint& q) {
  return pullback_with_offset(A, f, q, 0.0);
}

ScalarField translate_graph(const StepTwoAlgebra& A, const ScalarField& phi, const GroupPoint& q) {
  return pullback_with_offset(A, phi, q, q.x[0]);
}

GroupPoint graph_map(const StepTwoAlgebra& A, const ScalarField& phi, const Vec& w) {
  return w_mul_l(A, w, phi(w));
}

Vec project_w(const StepTwoAlgebra& A, const Vec& free_w) {
  const int m = A.rank(), h = A.vertical_dim();
  if (free_w.size() != (m - 1) + pair_count(m))
    throw std::invalid_argument("project_w: wrong free W dimension");
  Vec out = Vec::Zero(A.w_dim());
  for (int ell = 2; ell <= m; ++ell) out[w_axis_x(ell)] = free_w[w_axis_x(ell)];
  for (int i = 1; i <= h; ++i) {
    double v = 0.0;
    for (int ell = 2; ell <= m; ++ell)
      for (int s = 1; s < ell; ++s)
        v += A.b(i, ell, s) * free_w[w_axis_pair(m, pair_pos(ell, s, m))];
    out[w_axis_y(m, i)] = v;
  }
  return out;
}

ScalarField lift_graph(const StepTwoAlgebra& A, const ScalarField& phi, const Box& free_w_box) {
  const int m = A.rank();
  if (phi.dim() != A.w_dim())
    throw std::invalid_argument("lift_graph: field does not live on W");
  if (free_w_box.dim() != (m - 1) + pair_count(m))
    throw std::invalid_argument("lift_graph: box does not live on the free W");

  std::optional<std::vector<int>> deps;
  if (phi.deps()) {
    std::vector<int> out;
    for (int r : *phi.deps())
      if (r < m - 1) out.push_back(r);  // horizontal axes carry over
    for (int ell = 2; ell <= m; ++ell)
      for (int s = 1; s < ell; ++s) {
        bool used = false;
        for (int i = 1; i <= A.vertical_dim() && !used; ++i)
          used = A.b(i, ell, s) != 0.0 && phi.depends_on(w_axis_y(m, i));
        if (used) out.push_back(w_axis_pair(m, pair_pos(ell, s, m)));
      }
    deps = std::move(out);
  }
  StepTwoAlgebra alg = A;
  ScalarField base = phi;
  return ScalarField::closed_form(
      free_w_box, [alg, base](const Vec& wf) { return base(project_w(alg, wf)); }, std::move(deps));
}

GroupPoint to_group_point(const FreePoint& p) { return {p.x, p.y}; }

FreePoint to_free_point(int m, const GroupPoint& p) {
  if (p.x.size() != m || p.ystar.size() != pair_count(m))
    throw std::invalid_argument("to_free_point: dimensions do not match a free point");
  return {p.x, p.ystar};
}

}  // namespace carnot
