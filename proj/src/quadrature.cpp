#include "carnot/quadrature.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace carnot {

namespace {

struct AxisGrid {
  double lo = 0.0;
  double h = 0.0;
  int n = 0;
  double node(int i) const { return lo + (i + 0.5) * h; }
};

std::vector<AxisGrid> make_grids(const Box& box, const std::vector<int>& levels) {
  if (static_cast<int>(levels.size()) != box.dim())
    throw std::invalid_argument("quadrature: one node count per axis required");
  std::vector<AxisGrid> g(box.dim());
  for (int a = 0; a < box.dim(); ++a) {
    if (levels[a] < 1) throw std::invalid_argument("quadrature: node counts must be positive");
    g[a] = {box.lo[a], (box.hi[a] - box.lo[a]) / levels[a], levels[a]};
  }
  return g;
}

std::vector<AxisGrid> make_grids(const Box& box, int level) {
  return make_grids(box, std::vector<int>(box.dim(), level));
}

// Bounding box of the support of xi o pre.
Box integration_box(const BumpTest& xi, const AffineMap* pre) {
  const Box supp = xi.support();
  if (!pre) return supp;
  const int d = supp.dim();
  const Mat Ainv = pre->A.partialPivLu().inverse();
  Vec lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
  Vec hi = -lo;
  Vec corner(d);
  for (int mask = 0; mask < (1 << d); ++mask) {
    for (int a = 0; a < d; ++a) corner[a] = (mask >> a) & 1 ? supp.hi[a] : supp.lo[a];
    const Vec w = Ainv * (corner - pre->c);
    lo = lo.cwiseMin(w);
    hi = hi.cwiseMax(w);
  }
  return Box(lo, hi);
}

void check_coef_domains(const std::vector<WeakTerm>& terms, const Box& box) {
  for (const WeakTerm& t : terms)
    if (!t.coef.domain().contains(box.lo, 1e-12) || !t.coef.domain().contains(box.hi, 1e-12))
      throw DomainError("weak_form_integral: test support escapes a coefficient domain");
}

}  // namespace

double tensor_midpoint(const Box& box, int level, const std::function<double(const Vec&)>& f) {
  return tensor_midpoint(box, std::vector<int>(box.dim(), level), f);
}

double tensor_midpoint(const Box& box, const std::vector<int>& levels,
                       const std::function<double(const Vec&)>& f) {
  const int d = box.dim();
  const std::vector<AxisGrid> g = make_grids(box, levels);
  double weight = 1.0;
  for (const AxisGrid& ax : g) weight *= ax.h;

  std::vector<int> idx(d, 0);
  Vec w(d);
  for (int a = 0; a < d; ++a) w[a] = g[a].node(0);
  double acc = 0.0;
  while (true) {
    acc += f(w);
    int a = d - 1;
    while (a >= 0 && ++idx[a] == g[a].n) idx[a--] = 0;
    if (a < 0) break;
    for (int b = a; b < d; ++b) w[b] = g[b].node(idx[b]);
  }
  return acc * weight;
}

double weak_form_integral_generic(const std::vector<WeakTerm>& terms, const BumpTest& xi,
                                  const AffineMap* pre, int level) {
  const int d = xi.dim();
  const Box box = integration_box(xi, pre);
  check_coef_domains(terms, box);
  const std::vector<AxisGrid> g = make_grids(box, level);
  double weight = 1.0;
  for (const AxisGrid& ax : g) weight *= ax.h;

  std::vector<int> idx(d, 0);
  Vec w(d), y(d), vals(d), ders(d), pref(d + 1), suff(d + 1);
  for (int a = 0; a < d; ++a) w[a] = g[a].node(0);

  double acc = 0.0;
  while (true) {
    if (pre)
      y.noalias() = pre->A * w + pre->c;
    else
      y = w;

    bool dead = false;
    for (int a = 0; a < d; ++a) {
      vals[a] = xi.axis_factor(a, y[a]);
      ders[a] = xi.axis_factor_deriv(a, y[a]);
      if (vals[a] == 0.0 && ders[a] == 0.0) {
        dead = true;
        break;
      }
    }
    if (!dead) {
      pref[0] = 1.0;
      for (int a = 0; a < d; ++a) pref[a + 1] = pref[a] * vals[a];
      suff[d] = 1.0;
      for (int a = d; a-- > 0;) suff[a] = suff[a + 1] * vals[a];

      double point = 0.0;
      for (const WeakTerm& t : terms) {
        double dtest;
        if (t.axis < 0) {
          dtest = pref[d];
        } else if (!pre) {
          dtest = ders[t.axis] * pref[t.axis] * suff[t.axis + 1];
        } else {
          dtest = 0.0;
          for (int r = 0; r < d; ++r) {
            const double arc = pre->A(r, t.axis);
            if (arc != 0.0) dtest += arc * ders[r] * pref[r] * suff[r + 1];
          }
        }
        if (dtest != 0.0) point += t.coef(w) * dtest;
      }
      acc += point;
    }

    int a = d - 1;
    while (a >= 0 && ++idx[a] == g[a].n) idx[a--] = 0;
    if (a < 0) break;
    for (int b = a; b < d; ++b) w[b] = g[b].node(idx[b]);
  }
  return acc * weight;
}

namespace {

struct FactorPlan {
  std::vector<int> S;          // explicitly iterated axes
  std::vector<int> V;          // factored axes
  bool shifts_vary = false;    // some V-axis shift depends on S coordinates
};

// The factored path applies when the linear part is the identity plus a
// block whose row and column index sets are disjoint, and every coefficient
// declares its dependence set.
bool plan_factorization(const std::vector<WeakTerm>& terms, const AffineMap* pre, int d,
                        FactorPlan& plan) {
  std::vector<bool> in_S(d, false);
  std::vector<bool> off_row(d, false), off_col(d, false);
  if (pre) {
    for (int r = 0; r < d; ++r) {
      if (pre->A(r, r) != 1.0) return false;
      for (int k = 0; k < d; ++k)
        if (k != r && pre->A(r, k) != 0.0) {
          off_row[r] = true;
          off_col[k] = true;
        }
    }
    for (int a = 0; a < d; ++a)
      if (off_row[a] && off_col[a]) return false;
    for (int a = 0; a < d; ++a)
      if (off_col[a]) in_S[a] = true;
  }
  for (const WeakTerm& t : terms) {
    if (!t.coef.deps()) return false;
    for (int a : *t.coef.deps()) in_S[a] = true;
  }
  for (int a = 0; a < d; ++a) {
    if (in_S[a])
      plan.S.push_back(a);
    else
      plan.V.push_back(a);
  }
  if (plan.V.empty()) return false;
  for (int v : plan.V)
    if (off_row[v]) plan.shifts_vary = true;
  return true;
}

}  // namespace

double weak_form_integral(const std::vector<WeakTerm>& terms, const BumpTest& xi,
                          const AffineMap* pre, int level) {
  const int d = xi.dim();
  FactorPlan plan;
  if (!plan_factorization(terms, pre, d, plan))
    return weak_form_integral_generic(terms, xi, pre, level);

  const Box box = integration_box(xi, pre);
  check_coef_domains(terms, box);
  const std::vector<AxisGrid> g = make_grids(box, level);

  const int ns = static_cast<int>(plan.S.size());
  const int nv = static_cast<int>(plan.V.size());

  // Offsets: arg_a(w) = w_a + c_a + sum_{k in S} A(a,k) w_k.
  Vec base_shift = Vec::Zero(d);
  if (pre) base_shift = pre->c;

  // 1-d sums over factored axes, recomputed per S-point only when the shift
  // actually varies there.
  Vec S0(nv), S1(nv);
  auto v_sums = [&](int vi, double shift) {
    const int v = plan.V[vi];
    double s0 = 0.0, s1 = 0.0;
    for (int i = 0; i < g[v].n; ++i) {
      const double x = g[v].node(i) + shift;
      s0 += xi.axis_factor(v, x);
      s1 += xi.axis_factor_deriv(v, x);
    }
    S0[vi] = s0 * g[v].h;
    S1[vi] = s1 * g[v].h;
  };
  if (!plan.shifts_vary)
    for (int vi = 0; vi < nv; ++vi) v_sums(vi, base_shift[plan.V[vi]]);

  double s_weight = 1.0;
  for (int a : plan.S) s_weight *= g[a].h;

  std::vector<int> idx(ns, 0);
  Vec w = box.center();  // factored slots pinned anywhere valid; coefs ignore them
  for (int si = 0; si < ns; ++si) w[plan.S[si]] = g[plan.S[si]].node(0);

  Vec svals(ns), sders(ns), spref(ns + 1), ssuff(ns + 1), vpref(nv + 1), vsuff(nv + 1);
  double acc = 0.0;
  while (true) {
    if (plan.shifts_vary) {
      for (int vi = 0; vi < nv; ++vi) {
        const int v = plan.V[vi];
        double shift = base_shift[v];
        if (pre)
          for (int si = 0; si < ns; ++si) shift += pre->A(v, plan.S[si]) * w[plan.S[si]];
        v_sums(vi, shift);
      }
    }

    for (int si = 0; si < ns; ++si) {
      const int a = plan.S[si];
      double arg = w[a] + base_shift[a];
      if (pre)
        for (int sj = 0; sj < ns; ++sj)
          if (sj != si) arg += pre->A(a, plan.S[sj]) * w[plan.S[sj]];
      svals[si] = xi.axis_factor(a, arg);
      sders[si] = xi.axis_factor_deriv(a, arg);
    }
    spref[0] = 1.0;
    for (int si = 0; si < ns; ++si) spref[si + 1] = spref[si] * svals[si];
    ssuff[ns] = 1.0;
    for (int si = ns; si-- > 0;) ssuff[si] = ssuff[si + 1] * svals[si];
    vpref[0] = 1.0;
    for (int vi = 0; vi < nv; ++vi) vpref[vi + 1] = vpref[vi] * S0[vi];
    vsuff[nv] = 1.0;
    for (int vi = nv; vi-- > 0;) vsuff[vi] = vsuff[vi + 1] * S0[vi];

    const double prod_s = spref[ns];
    const double prod_v = vpref[nv];

    double point = 0.0;
    for (const WeakTerm& t : terms) {
      double dtest;
      if (t.axis < 0) {
        dtest = prod_s * prod_v;
      } else {
        dtest = 0.0;
        // rows with d(arg_r)/d(w_axis) nonzero: r == axis plus the off-block rows
        for (int si = 0; si < ns; ++si) {
          const int r = plan.S[si];
          const double col = pre ? pre->A(r, t.axis) : (r == t.axis ? 1.0 : 0.0);
          if (col != 0.0) dtest += col * sders[si] * spref[si] * ssuff[si + 1] * prod_v;
        }
        for (int vi = 0; vi < nv; ++vi) {
          const int r = plan.V[vi];
          const double col = pre ? pre->A(r, t.axis) : (r == t.axis ? 1.0 : 0.0);
          if (col != 0.0) dtest += col * prod_s * S1[vi] * vpref[vi] * vsuff[vi + 1];
        }
      }
      if (dtest != 0.0) point += t.coef(w) * dtest;
    }
    acc += point;

    int si = ns - 1;
    while (si >= 0 && ++idx[si] == g[plan.S[si]].n) idx[si--] = 0;
    if (si < 0) break;
    for (int sj = si; sj < ns; ++sj) w[plan.S[sj]] = g[plan.S[sj]].node(idx[sj]);
  }
  return acc * s_weight;
}

}  // namespace carnot
