#include "carnot/verify.hpp"

#include "carnot/free.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace carnot {

nlohmann::json VerificationReport::to_json() const {
  return {{"check", check},   {"scenario", scenario},   {"seed", seed}, {"params", params},
          {"values", values}, {"tolerance", tolerance}, {"pass", pass}};
}

// ---------------------------------------------------------------------------
// Weak residual term builders.

std::vector<WeakTerm> weak_terms_G(const StepTwoAlgebra& A, const ScalarField& phi,
                                   const ScalarField& omega_j, int j) {
  if (j < 2 || j > A.rank()) throw std::invalid_argument("weak_terms_G: j out of range");
  if (phi.dim() != A.w_dim()) throw std::invalid_argument("weak_terms_G: phi not on W");
  const int m = A.rank(), h = A.vertical_dim();
  const Box& dom = phi.domain();
  std::vector<WeakTerm> terms;

  terms.push_back({ScalarField::closed_form(dom, [phi](const Vec& w) { return -phi(w); },
                                            phi.deps()),
                   w_axis_x(j)});

  for (int i = 1; i <= h; ++i) {
    const double bq = A.b(i, j, 1);
    if (bq != 0.0)
      terms.push_back({ScalarField::closed_form(
                           dom,
                           [phi, bq](const Vec& w) {
                             const double f = phi(w);
                             return 0.5 * bq * f * f;
                           },
                           phi.deps()),
                       w_axis_y(m, i)});

    std::vector<std::pair<int, double>> drift;  // (w axis of x_l, b coefficient)
    for (int l = 2; l <= m; ++l)
      if (A.b(i, j, l) != 0.0) drift.emplace_back(w_axis_x(l), A.b(i, j, l));
    if (!drift.empty()) {
      std::optional<std::vector<int>> deps;
      if (phi.deps()) {
        deps = *phi.deps();
        for (const auto& [axis, unused] : drift) deps->push_back(axis);
      }
      terms.push_back({ScalarField::closed_form(
                           dom,
                           [phi, drift](const Vec& w) {
                             double s = 0.0;
                             for (const auto& [axis, b] : drift) s += w[axis] * b;
                             return 0.5 * s * phi(w);
                           },
                           std::move(deps)),
                       w_axis_y(m, i)});
    }
  }

  terms.push_back({ScalarField::closed_form(omega_j.domain(),
                                            [omega_j](const Vec& w) { return -omega_j(w); },
                                            omega_j.deps()),
                   -1});
  return terms;
}

std::vector<WeakTerm> weak_terms_F(int m, const ScalarField& psi,
                                   const ScalarField& omega_pulled_j, int j) {
  if (j < 2 || j > m) throw std::invalid_argument("weak_terms_F: j out of range");
  if (psi.dim() != (m - 1) + pair_count(m))
    throw std::invalid_argument("weak_terms_F: psi not on the free W");
  const Box& dom = psi.domain();
  std::vector<WeakTerm> terms;

  terms.push_back({ScalarField::closed_form(dom, [psi](const Vec& w) { return -psi(w); },
                                            psi.deps()),
                   w_axis_x(j)});
  terms.push_back({ScalarField::closed_form(
                       dom,
                       [psi](const Vec& w) {
                         const double f = psi(w);
                         return 0.5 * f * f;
                       },
                       psi.deps()),
                   w_axis_pair(m, pair_pos(j, 1, m))});
  for (int l = j + 1; l <= m; ++l) {
    const int xa = w_axis_x(l);
    std::optional<std::vector<int>> deps;
    if (psi.deps()) {
      deps = *psi.deps();
      deps->push_back(xa);
    }
    terms.push_back({ScalarField::closed_form(
                         dom, [psi, xa](const Vec& w) { return -0.5 * w[xa] * psi(w); },
                         std::move(deps)),
                     w_axis_pair(m, pair_pos(l, j, m))});
  }
  for (int s = 2; s < j; ++s) {
    const int xa = w_axis_x(s);
    std::optional<std::vector<int>> deps;
    if (psi.deps()) {
      deps = *psi.deps();
      deps->push_back(xa);
    }
    terms.push_back({ScalarField::closed_form(
                         dom, [psi, xa](const Vec& w) { return 0.5 * w[xa] * psi(w); },
                         std::move(deps)),
                     w_axis_pair(m, pair_pos(j, s, m))});
  }

  terms.push_back(
      {ScalarField::closed_form(omega_pulled_j.domain(),
                                [omega_pulled_j](const Vec& w) { return -omega_pulled_j(w); },
                                omega_pulled_j.deps()),
       -1});
  return terms;
}

std::vector<WeakTerm> weak_terms_engel(const ScalarField& phi, const ScalarField& omega) {
  if (phi.dim() != 3) throw std::invalid_argument("weak_terms_engel: phi must be 3-d");
  const Box& dom = phi.domain();
  std::vector<WeakTerm> terms;
  terms.push_back({ScalarField::closed_form(dom, [phi](const Vec& w) { return -phi(w); },
                                            phi.deps()),
                   0});
  terms.push_back({ScalarField::closed_form(
                       dom,
                       [phi](const Vec& w) {
                         const double f = phi(w);
                         return -0.5 * f * f;
                       },
                       phi.deps()),
                   1});
  terms.push_back({ScalarField::closed_form(
                       dom,
                       [phi](const Vec& w) {
                         const double f = phi(w);
                         return -f * f * f / 6.0;
                       },
                       phi.deps()),
                   2});
  terms.push_back({ScalarField::closed_form(omega.domain(),
                                            [omega](const Vec& w) { return -omega(w); },
                                            omega.deps()),
                   -1});
  return terms;
}

double weak_residual_G(const StepTwoAlgebra& A, const ScalarField& phi,
                       const ScalarField& omega_j, int j, const BumpTest& xi, int level) {
  return weak_form_integral(weak_terms_G(A, phi, omega_j, j), xi, nullptr, level);
}

double weak_residual_G_translated_test(const StepTwoAlgebra& A, const ScalarField& phi,
                                       const ScalarField& omega_j, int j, const BumpTest& xi,
                                       const GroupPoint& q, int level) {
  const AffineMap pre = P_q_map(A, q);
  return weak_form_integral(weak_terms_G(A, phi, omega_j, j), xi, &pre, level);
}

double weak_residual_F(int m, const ScalarField& psi, const ScalarField& omega_pulled_j, int j,
                       const BumpTest& xi, int level) {
  return weak_form_integral(weak_terms_F(m, psi, omega_pulled_j, j), xi, nullptr, level);
}

double weak_residual_F_matched(const StepTwoAlgebra& A, const ScalarField& psi,
                               const ScalarField& omega_pulled_j, int j, const BumpTest& xi_G,
                               const BumpTest& eta, int level) {
  const int m = A.rank(), h = A.vertical_dim();
  const int np = pair_count(m);
  const int d = (m - 1) + np;
  if (xi_G.dim() != A.w_dim() || eta.dim() != np - h)
    throw std::invalid_argument("weak_residual_F_matched: test dimensions do not match");
  if (xi_G.p != eta.p)
    throw std::invalid_argument("weak_residual_F_matched: mismatched smoothness exponents");

  const Mat M = complete_matrix_M(A);
  const Mat Minv = M.partialPivLu().inverse();
  const double absdet = std::abs(M.partialPivLu().determinant());

  // Combined product bump in the mapped coordinates u = M w.
  Vec center(d), radii(d);
  center << xi_G.center, eta.center;
  radii << xi_G.radii, eta.radii;
  const BumpTest combined(center, radii, xi_G.p);

  const std::vector<WeakTerm> terms = weak_terms_F(m, psi, omega_pulled_j, j);

  // Matched rule: the midpoint tensor grid lives on supp(xi_G) x supp(eta)
  // in the u coordinates and is pulled back through M^-1, weights scaled by
  // 1/|det M|. Same per-axis resolution as the G-side rule.
  const Box supp = combined.support();
  std::vector<double> h_ax(d), lo(d);
  double wgt = 1.0 / absdet;
  for (int a = 0; a < d; ++a) {
    h_ax[a] = (supp.hi[a] - supp.lo[a]) / level;
    lo[a] = supp.lo[a];
    wgt *= h_ax[a];
  }

  std::vector<int> idx(d, 0);
  Vec u(d), w(d), vals(d), ders(d), pref(d + 1), suff(d + 1);
  for (int a = 0; a < d; ++a) u[a] = lo[a] + 0.5 * h_ax[a];
  double acc = 0.0;
  while (true) {
    w.noalias() = Minv * u;
    for (int a = 0; a < d; ++a) {
      vals[a] = combined.axis_factor(a, u[a]);
      ders[a] = combined.axis_factor_deriv(a, u[a]);
    }
    pref[0] = 1.0;
    for (int a = 0; a < d; ++a) pref[a + 1] = pref[a] * vals[a];
    suff[d] = 1.0;
    for (int a = d; a-- > 0;) suff[a] = suff[a + 1] * vals[a];

    double point = 0.0;
    for (const WeakTerm& t : terms) {
      double dtest;
      if (t.axis < 0) {
        dtest = pref[d];
      } else {
        dtest = 0.0;
        for (int r = 0; r < d; ++r) {
          const double mr = M(r, t.axis);
          if (mr != 0.0) dtest += mr * ders[r] * pref[r] * suff[r + 1];
        }
      }
      if (dtest != 0.0) point += t.coef(w) * dtest;
    }
    acc += point;

    int a = d - 1;
    while (a >= 0 && ++idx[a] == level) idx[a--] = 0;
    if (a < 0) break;
    for (int b = a; b < d; ++b) u[b] = lo[b] + (idx[b] + 0.5) * h_ax[b];
  }
  return acc * wgt;
}

double weak_residual_engel(const ScalarField& phi, const ScalarField& omega, const BumpTest& xi,
                           int level) {
  return weak_form_integral(weak_terms_engel(phi, omega), xi, nullptr, level);
}

// ---------------------------------------------------------------------------

VerificationReport broad_star_check(const ScalarField& phi, const VectorField& omega,
                                    const std::vector<Characteristic>& curves, double tol) {
  VerificationReport rep;
  rep.check = "broadstar";
  rep.tolerance = tol;
  rep.pass = true;
  double h = 0.0;
  for (const Characteristic& c : curves) {
    if (c.j < 2 || static_cast<std::size_t>(c.j - 2) >= omega.size())
      throw std::invalid_argument("broad_star_check: curve index has no datum component");
    const std::vector<double> cum = integrate_along(c, omega[c.j - 2]);
    const double phi0 = phi(c.base);
    double worst = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
      worst = std::max(worst, std::abs(phi(c.states[k]) - phi0 - cum[k]));
    rep.values.push_back(worst);
    rep.pass = rep.pass && worst <= tol;
    h = c.h_step;
  }
  rep.params = {{"curves", curves.size()}, {"h_step", h}};
  return rep;
}

VerificationReport lipschitz_check(const ScalarField& phi, const VectorField& omega,
                                   const std::vector<Characteristic>& curves, double slack,
                                   double tol) {
  VerificationReport rep;
  rep.check = "lipschitz";
  rep.tolerance = tol;
  rep.pass = true;
  std::vector<double> sup(omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) sup[k] = omega[k].sup_abs();
  long violations = 0;
  for (const Characteristic& c : curves) {
    const double L = slack * sup.at(c.j - 2);
    std::vector<double> f(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) f[k] = phi(c.states[k]);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < c.size(); ++s)
      for (std::size_t t = s + 1; t < c.size(); ++t) {
        const double excess = std::abs(f[t] - f[s]) - L * (c.times[t] - c.times[s]);
        if (excess > worst) worst = excess;
        if (excess > tol) ++violations;
      }
    rep.values.push_back(worst);
    rep.pass = rep.pass && worst <= tol;
  }
  rep.params = {{"curves", curves.size()}, {"slack", slack}, {"violations", violations}};
  return rep;
}

namespace {

// Composite Simpson over uniformly sampled values (three-point end rule for
// an odd interval count).
double simpson_total(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  double acc = 0.0;
  std::size_t k = 0;
  for (; k + 2 < n; k += 2) acc += h / 3.0 * (f[k] + 4.0 * f[k + 1] + f[k + 2]);
  if (k + 1 < n) {
    if (n >= 3)
      acc += h / 12.0 * (-f[n - 3] + 8.0 * f[n - 2] + 5.0 * f[n - 1]);
    else
      acc += 0.5 * h * (f[0] + f[1]);
  }
  return acc;
}

double midpoint_1d(double a, double b, int n, const std::function<double(double)>& f) {
  const double h = (b - a) / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += f(a + (i + 0.5) * h);
  return acc * h;
}

}  // namespace

VerificationReport dafermos_identity(const ScalarField& psi_hat, const ScalarField& omega_hat,
                                     const Characteristic& curve, double eps, int level,
                                     double tol) {
  if (psi_hat.dim() != 2 || omega_hat.dim() != 2)
    throw std::invalid_argument("dafermos_identity: fields must be planar");
  VerificationReport rep;
  rep.check = "dafermos";
  rep.tolerance = tol;

  const std::size_t b = curve.base_index;
  const std::size_t n = curve.size();
  if (n <= b + 1) throw std::invalid_argument("dafermos_identity: curve has no forward part");
  const double T = curve.times.back();

  auto strip = [&](std::size_t k, const ScalarField& f) {
    const double t = curve.states[k][0];
    const double g = curve.states[k][1];
    return midpoint_1d(g - eps, g, level, [&](double x) {
      Vec p(2);
      p << t, x;
      return f(p);
    });
  };

  const double lead = strip(n - 1, psi_hat);
  const double init = strip(b, psi_hat);

  std::vector<double> datum(n - b), square(n - b);
  for (std::size_t k = b; k < n; ++k) {
    datum[k - b] = strip(k, omega_hat);
    const double t = curve.states[k][0];
    const double g = curve.states[k][1];
    Vec pm(2), pc(2);
    pm << t, g - eps;
    pc << t, g;
    const double dpsi = psi_hat(pm) - psi_hat(pc);
    square[k - b] = dpsi * dpsi;
  }
  const double L = lead - init - simpson_total(datum, curve.h_step);
  const double R = -0.5 * simpson_total(square, curve.h_step);

  rep.values = {L, R, std::abs(L - R)};
  rep.pass = std::abs(L - R) <= tol;
  rep.params = {{"eps", eps}, {"level", level}, {"T", T}};
  return rep;
}

VerificationReport holder_modulus(const ScalarField& phi, const std::vector<int>& axes,
                                  double alpha, const std::vector<double>& radii,
                                  std::uint64_t seed, int pairs_per_radius) {
  if (axes.empty()) throw std::invalid_argument("holder_modulus: need at least one axis");
  VerificationReport rep;
  rep.check = "holder";
  rep.seed = seed;

  std::vector<double> rs = radii;
  std::sort(rs.begin(), rs.end(), std::greater<double>());
  const Box& dom = phi.domain();
  Rng rng(seed);

  nlohmann::json warnings = nlohmann::json::array();
  for (double r : rs) {
    double M = 0.0;
    int valid = 0;

    auto consider = [&](const Vec& bpt, const Vec& offset) {
      const Vec b2 = bpt + offset;
      const double gap = offset.norm();
      if (gap <= 0.0 || gap >= r) return;
      if (!dom.contains(bpt) || !dom.contains(b2)) return;
      try {
        // Translated fields live on a box hull; points of the hull outside
        // the true translated domain are skipped, not fatal.
        M = std::max(M, std::abs(phi(b2) - phi(bpt)) / std::pow(gap, alpha));
        ++valid;
      } catch (const DomainError&) {
      }
    };

    // Deterministic anchors: centred single-axis gaps and straddles.
    const Vec c = dom.center();
    for (int a : axes) {
      const double g = 0.5 * r;
      Vec off = Vec::Zero(dom.dim());
      off[a] = g;
      consider(c, off);
      Vec half = c;
      half[a] -= 0.5 * g;
      consider(half, off);
    }

    int attempts = 0;
    while (valid < pairs_per_radius && attempts < 4 * pairs_per_radius) {
      ++attempts;
      const Vec bpt = rng.point_in(dom);
      Vec off = Vec::Zero(dom.dim());
      double norm2 = 0.0;
      for (int a : axes) {
        off[a] = rng.uniform(-1.0, 1.0);
        norm2 += off[a] * off[a];
      }
      if (norm2 == 0.0) continue;
      const double mag = r * 0.999 * std::pow(10.0, rng.uniform(-3.0, 0.0));
      off *= mag / std::sqrt(norm2);
      consider(bpt, off);
    }
    if (valid < pairs_per_radius / 10)
      warnings.push_back("thin sample shell at r=" + std::to_string(r));
    rep.values.push_back(M);
  }

  // Least-squares constant for M(r) ~ C r^alpha.
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const double ra = std::pow(rs[k], alpha);
    num += rep.values[k] * ra;
    den += ra * ra;
  }
  const double C = den > 0.0 ? num / den : 0.0;

  bool monotone = true;
  for (std::size_t k = 0; k + 1 < rep.values.size(); ++k)
    monotone = monotone && rep.values[k + 1] <= 1.1 * rep.values[k] + 1e-15;
  const bool decays = rep.values.back() <= 0.5 * rep.values.front() + 1e-12;
  rep.pass = monotone && decays;
  rep.params = {{"alpha", alpha},       {"radii", rs},
                {"fitted_constant", C}, {"monotone", monotone},
                {"decays", decays},     {"warnings", warnings},
                {"axes", axes}};
  return rep;
}

VerificationReport translation_invariance_check(const StepTwoAlgebra& A, const ScalarField& phi,
                                                const ScalarField& omega_j, int j,
                                                const GroupPoint& q,
                                                const std::vector<BumpTest>& bumps, int level,
                                                double tol) {
  VerificationReport rep;
  rep.check = "translation";
  rep.tolerance = tol;
  rep.pass = true;

  const ScalarField phi_q = translate_graph(A, phi, q);
  const ScalarField omega_pulled = pullback_P_q(A, omega_j, q);

  for (const BumpTest& xi : bumps) {
    const double lhs = weak_residual_G(A, phi_q, omega_pulled, j, xi, level);
    const double rhs = weak_residual_G_translated_test(A, phi, omega_j, j, xi, q, level);
    const double diff = std::abs(lhs - rhs);
    rep.values.push_back(diff);
    rep.pass = rep.pass && diff <= tol;
  }
  rep.params = {{"level", level}, {"bumps", bumps.size()}, {"j", j}};
  return rep;
}

VerificationReport dimensional_reduction_check(const ReductionInput& in,
                                               const std::vector<double>& eps_seq, int level,
                                               double slope_lo, double slope_hi) {
  const int dk = static_cast<int>(in.kept_axes.size());
  if (in.xi_hat.dim() != dk)
    throw std::invalid_argument("dimensional_reduction_check: test/kept mismatch");
  for (const WeakTerm& t : in.terms) {
    if (t.coef.dim() != dk + 1)
      throw std::invalid_argument(
          "dimensional_reduction_check: coefficients must live on kept axes plus one z axis");
    if (t.axis >= dk)
      throw std::invalid_argument("dimensional_reduction_check: derivative axis outside kept set");
  }
  const Box& full = in.terms.front().coef.domain();
  if (in.z0 < full.lo[in.z_axis] || in.z0 > full.hi[in.z_axis])
    throw std::invalid_argument("dimensional_reduction_check: empty slice");

  // Residual of the kept-space integrand at a fixed z value.
  auto slice_residual = [&](double z) {
    std::vector<WeakTerm> sliced;
    sliced.reserve(in.terms.size());
    for (const WeakTerm& t : in.terms) {
      ScalarField coef = t.coef;
      const std::vector<int> kept = in.kept_axes;
      const int z_axis = in.z_axis;
      Vec klo(dk), khi(dk);
      for (int a = 0; a < dk; ++a) {
        klo[a] = coef.domain().lo[kept[a]];
        khi[a] = coef.domain().hi[kept[a]];
      }
      Box kept_box(klo, khi);
      std::optional<std::vector<int>> deps;
      if (coef.deps()) {
        deps.emplace();
        for (int a = 0; a < dk; ++a)
          if (coef.depends_on(kept[a])) deps->push_back(a);
      }
      sliced.push_back({ScalarField::closed_form(
                            kept_box,
                            [coef, kept, z_axis, z, dk](const Vec& v) {
                              Vec w(dk + 1);
                              for (int a = 0; a < dk; ++a) w[kept[a]] = v[a];
                              w[z_axis] = z;
                              return coef(w);
                            },
                            std::move(deps)),
                        t.axis});
    }
    return weak_form_integral(sliced, in.xi_hat, nullptr, level);
  };

  const double reduced = slice_residual(in.z0);

  VerificationReport rep;
  rep.check = "reduction";
  const int z_nodes = 64;
  for (double eps : eps_seq) {
    const PlateauBump plateau(eps);
    const double e2 = plateau.half_support();
    // Piecewise composite rule: plateau core plus the two smoothstep tails.
    double full_eps = 0.0;
    const double pieces[3][2] = {{-e2, -eps}, {-eps, eps}, {eps, e2}};
    for (const auto& piece : pieces)
      full_eps += midpoint_1d(in.z0 + piece[0], in.z0 + piece[1], z_nodes, [&](double z) {
        return plateau.value(z - in.z0) * slice_residual(z);
      });
    full_eps /= 2.0 * eps;
    rep.values.push_back(std::abs(full_eps - reduced));
  }

  const double floor = 1e-12;
  bool at_floor = true;
  for (double v : rep.values) at_floor = at_floor && v <= floor;
  double slope = 0.0;
  if (at_floor) {
    rep.pass = true;
  } else {
    slope = fit_loglog_slope(eps_seq, rep.values);
    rep.pass = slope >= slope_lo && slope <= slope_hi;
  }
  rep.params = {{"eps", eps_seq},     {"reduced", reduced},      {"slope", slope},
                {"level", level},     {"slope_lo", slope_lo},    {"slope_hi", slope_hi},
                {"at_floor", at_floor}};
  rep.tolerance = slope_hi;
  return rep;
}

VerificationReport lift_residual_check(const StepTwoAlgebra& A, const ScalarField& phi,
                                       const ScalarField& omega_j, int j, const BumpTest& xi_G,
                                       const BumpTest& eta, const Box& free_box, int level,
                                       double ratio_tol) {
  const ScalarField psi = lift_graph(A, phi, free_box);
  const ScalarField omega_pulled = lift_graph(A, omega_j, free_box);
  const Mat M = complete_matrix_M(A);
  const double absdet = std::abs(M.partialPivLu().determinant());

  const double res_G = weak_residual_G(A, phi, omega_j, j, xi_G, level);
  const double res_F = weak_residual_F_matched(A, psi, omega_pulled, j, xi_G, eta, level);
  const double res_F_norm = res_F * absdet / eta.integral();

  VerificationReport rep;
  rep.check = "lift-residual";
  rep.values = {std::abs(res_F_norm), std::abs(res_G)};
  rep.tolerance = ratio_tol;
  rep.pass = std::abs(res_F_norm) <= ratio_tol * std::abs(res_G);
  rep.params = {{"level", level}, {"j", j}, {"det_M", absdet}, {"res_F_raw", res_F}};
  return rep;
}

VerificationReport projection_covariance_check(const StepTwoAlgebra& A, const ScalarField& phi,
                                               const Box& free_box, int j,
                                               const std::vector<Vec>& free_bases, double T,
                                               double h_step, double c_defect) {
  const ScalarField psi = lift_graph(A, phi, free_box);
  const ProjectedFieldF field_F(A.rank(), psi, j);

  VerificationReport rep;
  rep.check = "lift-project";
  rep.tolerance = c_defect * std::pow(h_step, 4);
  rep.pass = true;
  for (const Vec& base : free_bases) {
    const Characteristic gamma_F = integrate(field_F, base, T, h_step);
    const Characteristic projected = project_curve(A, gamma_F);
    const ProjectedFieldG field_G(A, phi, j);
    const Characteristic direct = integrate(field_G, project_w(A, base), T, h_step);
    if (gamma_F.exited || direct.exited)
      throw DomainError("projection_covariance_check: curve left the domain");
    double defect = 0.0;
    for (std::size_t k = 0; k < projected.size(); ++k)
      defect = std::max(defect,
                        (projected.states[k] - direct.states[k]).cwiseAbs().maxCoeff());
    rep.values.push_back(defect);
    rep.pass = rep.pass && defect <= rep.tolerance;
  }
  rep.params = {{"T", T}, {"h_step", h_step}, {"curves", free_bases.size()}, {"j", j}};
  return rep;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need matching samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(std::max(y[k], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace carnot
