#include "carnot/runner.hpp"

#include "carnot/characteristics.hpp"
#include "carnot/free.hpp"
#include "carnot/graphs.hpp"
#include "carnot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace carnot {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<Characteristic> make_curves(const Scenario& scn, std::uint64_t seed, int count,
                                        double T, double h_step) {
  Rng rng(seed);
  std::vector<Characteristic> curves;
  for (int k = 0; k < count; ++k) {
    const Vec base = rng.point_in(scn.seed_box);
    if (scn.kind == "engel") {
      curves.push_back(integrate(EngelField(scn.phi, EngelGenerator::X2), base, T, h_step));
    } else if (scn.kind == "free") {
      for (int j = 2; j <= scn.rank; ++j)
        curves.push_back(integrate(ProjectedFieldF(scn.rank, scn.phi, j), base, T, h_step));
    } else {
      for (int j = 2; j <= scn.algebra->rank(); ++j)
        curves.push_back(integrate(ProjectedFieldG(*scn.algebra, scn.phi, j), base, T, h_step));
    }
  }
  return curves;
}

VerificationReport distributional_check(const Scenario& scn, int level, double tol,
                                        std::uint64_t seed, int n_bumps) {
  VerificationReport rep;
  rep.check = "distributional";
  rep.tolerance = tol;
  rep.pass = true;
  Rng rng(seed);
  const Box bump_box = scn.domain.shrunk(0.9);
  for (int k = 0; k < n_bumps; ++k) {
    const BumpTest xi = BumpTest::random_in(bump_box, rng);
    double worst = 0.0;
    if (scn.kind == "engel") {
      worst = std::abs(weak_residual_engel(scn.phi, scn.omega[0], xi, level));
    } else if (scn.kind == "free") {
      for (int j = 2; j <= scn.rank; ++j)
        worst = std::max(worst,
                         std::abs(weak_residual_F(scn.rank, scn.phi, scn.omega[j - 2], j, xi, level)));
    } else {
      for (int j = 2; j <= scn.algebra->rank(); ++j)
        worst = std::max(
            worst, std::abs(weak_residual_G(*scn.algebra, scn.phi, scn.omega[j - 2], j, xi, level)));
    }
    rep.values.push_back(worst);
    rep.pass = rep.pass && worst <= tol;
  }
  rep.params = {{"level", level}, {"bumps", n_bumps}};
  return rep;
}

// Planar reduction of the scenario to the (x_j, y_j1) coordinates of the
// free side, j = 2.
void planar_fields(const Scenario& scn, ScalarField& psi_hat, ScalarField& omega_hat) {
  const int j = 2;
  if (scn.kind == "free") {
    const int m = scn.rank;
    const int xa = w_axis_x(j), ya = w_axis_pair(m, pair_pos(j, 1, m));
    Vec lo(2), hi(2);
    lo << scn.domain.lo[xa], scn.domain.lo[ya];
    hi << scn.domain.hi[xa], scn.domain.hi[ya];
    const Box box(lo, hi);
    const ScalarField phi = scn.phi, omega = scn.omega[0];
    const int dim = scn.domain.dim();
    auto embed = [dim, xa, ya](const Vec& v) {
      Vec w = Vec::Zero(dim);
      w[xa] = v[0];
      w[ya] = v[1];
      return w;
    };
    psi_hat = ScalarField::closed_form(box, [phi, embed](const Vec& v) { return phi(embed(v)); });
    omega_hat =
        ScalarField::closed_form(box, [omega, embed](const Vec& v) { return omega(embed(v)); });
    return;
  }
  const StepTwoAlgebra& A = *scn.algebra;
  const int m = A.rank(), h = A.vertical_dim();
  const int xa = w_axis_x(j);
  double vlo = -std::numeric_limits<double>::infinity(), vhi = -vlo;
  for (int i = 1; i <= h; ++i) {
    const double b = A.b(i, j, 1);
    if (b == 0.0) continue;
    double a0 = scn.domain.lo[w_axis_y(m, i)] / b, a1 = scn.domain.hi[w_axis_y(m, i)] / b;
    if (a0 > a1) std::swap(a0, a1);
    vlo = std::max(vlo, a0);
    vhi = std::min(vhi, a1);
  }
  if (!(vlo < vhi)) throw UsageError("dafermos: no nonlinear vertical direction for j=2");
  Vec lo(2), hi(2);
  lo << scn.domain.lo[xa], vlo;
  hi << scn.domain.hi[xa], vhi;
  const Box box(lo, hi);
  const ScalarField phi = scn.phi, omega = scn.omega[0];
  StepTwoAlgebra alg = A;
  auto embed = [alg, m, h, xa, j](const Vec& v) {
    Vec w = Vec::Zero(alg.w_dim());
    w[xa] = v[0];
    for (int i = 1; i <= h; ++i) w[w_axis_y(m, i)] = alg.b(i, j, 1) * v[1];
    return w;
  };
  psi_hat = ScalarField::closed_form(box, [phi, embed](const Vec& v) { return phi(embed(v)); });
  omega_hat =
      ScalarField::closed_form(box, [omega, embed](const Vec& v) { return omega(embed(v)); });
}

ReductionInput reduction_input(const Scenario& scn) {
  if (scn.kind == "engel" || scn.m() < 3)
    throw UsageError("reduction needs a rank >= 3 step-2 or free scenario");
  const int j = 2;
  std::vector<WeakTerm> terms =
      scn.kind == "free" ? weak_terms_F(scn.rank, scn.phi, scn.omega[0], j)
                         : weak_terms_G(*scn.algebra, scn.phi, scn.omega[0], j);
  terms.pop_back();  // keep the advective pairing only; a solution slices to zero everywhere

  ReductionInput in{std::move(terms), {}, w_axis_x(3), 0.0, BumpTest(Vec::Zero(1), Vec::Ones(1))};
  const int d = scn.domain.dim();
  for (int a = 0; a < d; ++a)
    if (a != in.z_axis) in.kept_axes.push_back(a);

  // Renumber derivative axes into kept coordinates.
  for (WeakTerm& t : in.terms)
    if (t.axis >= 0) {
      const auto it = std::find(in.kept_axes.begin(), in.kept_axes.end(), t.axis);
      if (it == in.kept_axes.end()) throw std::logic_error("reduction: axis fell on the slice");
      t.axis = static_cast<int>(it - in.kept_axes.begin());
    }

  const int dk = d - 1;
  Vec c(dk), r(dk);
  for (int a = 0; a < dk; ++a) {
    const int fa = in.kept_axes[a];
    c[a] = 0.5 * (scn.domain.lo[fa] + scn.domain.hi[fa]);
    r[a] = 0.35 * 0.5 * (scn.domain.hi[fa] - scn.domain.lo[fa]);
  }
  in.xi_hat = BumpTest(c, r);
  return in;
}

// Diagnostic plots: modulus against radius, deviation against eps,
// a sample characteristic, or residual against refinement, depending on
// what the check measured.
void write_plots(const Scenario& scn, const RunOptions& opt, const VerificationReport& rep,
                 const std::string& stem) {
  const std::string title = scn.id + " / " + opt.check;
  auto log10v = [](const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = std::log10(std::max(v[k], 1e-300));
    return out;
  };

  if (opt.check == "holder" || opt.check == "reduction") {
    std::vector<double> xs;
    const char* key = opt.check == "holder" ? "radii" : "eps";
    for (const auto& x : rep.params.at(key)) xs.push_back(x.get<double>());
    write_svg_polyline(stem + "_plot.svg", log10v(xs),
                       opt.check == "holder" ? rep.values : log10v(rep.values), title,
                       std::string("log10 ") + key,
                       opt.check == "holder" ? "M(r)" : "log10 deviation");
    return;
  }

  if (opt.check == "broadstar" || opt.check == "lipschitz") {
    // one sample characteristic, re-integrated deterministically
    const std::vector<Characteristic> curves =
        make_curves(scn, opt.seed, 1, scn.T, opt.step > 0.0 ? opt.step : scn.h_step);
    const Characteristic& c = curves.front();
    write_curve_csv(c, stem + "_curve.csv");
    const auto last = c.base.size() - 1;
    std::vector<double> ys(c.size());
    for (std::size_t k = 0; k < ys.size(); ++k) ys[k] = c.states[k][last];
    write_svg_polyline(stem + "_plot.svg", c.times, ys, title, "t", "last vertical coordinate");
    return;
  }

  if (opt.check == "distributional") {
    // residual of the first seeded bump under refinement
    Rng rng(opt.seed);
    const BumpTest xi = BumpTest::random_in(scn.domain.shrunk(0.9), rng);
    const int level = opt.grid > 0 ? opt.grid : scn.level;
    std::vector<double> lv, res;
    for (int l = std::max(8, level / 4); l <= level; l *= 2) {
      double r;
      if (scn.kind == "engel")
        r = weak_residual_engel(scn.phi, scn.omega[0], xi, l);
      else if (scn.kind == "free")
        r = weak_residual_F(scn.rank, scn.phi, scn.omega[0], 2, xi, l);
      else
        r = weak_residual_G(*scn.algebra, scn.phi, scn.omega[0], 2, xi, l);
      lv.push_back(std::log10(l));
      res.push_back(std::log10(std::max(std::abs(r), 1e-300)));
    }
    write_svg_polyline(stem + "_plot.svg", lv, res, title, "log10 nodes per axis",
                       "log10 |residual|");
    return;
  }

  std::vector<double> xs(rep.values.size());
  for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = static_cast<double>(k);
  write_svg_polyline(stem + "_plot.svg", xs, rep.values, title, "case", "value");
}

std::string check_csv(const VerificationReport& rep) {
  std::string out;
  std::string xlabel = "index";
  std::vector<double> xs;
  if (rep.check == "holder") {
    xlabel = "r";
    for (const auto& r : rep.params.at("radii")) xs.push_back(r.get<double>());
  } else if (rep.check == "reduction") {
    xlabel = "eps";
    for (const auto& e : rep.params.at("eps")) xs.push_back(e.get<double>());
  }
  out = xlabel + ",value\n";
  for (std::size_t k = 0; k < rep.values.size(); ++k) {
    const double x = k < xs.size() ? xs[k] : static_cast<double>(k);
    out += std::to_string(x) + "," + std::to_string(rep.values[k]) + "\n";
  }
  return out;
}

}  // namespace

VerificationReport run_check(const Scenario& scn, const RunOptions& opt) {
  const std::string& check = opt.check;
  if (std::find(check_names().begin(), check_names().end(), check) == check_names().end())
    throw UsageError("unknown check '" + check + "'");

  const int level = opt.grid > 0 ? opt.grid : scn.level;
  const double h_step = opt.step > 0.0 ? opt.step : scn.h_step;
  const double T = scn.T;
  VerificationReport rep;

  if (check == "distributional") {
    const double tol = opt.tol > 0.0 ? opt.tol : (scn.kind == "engel" ? 1e-4 : 1e-6);
    rep = distributional_check(scn, level, tol, opt.seed, 20);
  } else if (check == "broadstar") {
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-6 + 10.0 * std::pow(h_step, 4);
    rep = broad_star_check(scn.phi, scn.omega, make_curves(scn, opt.seed, 100, T, h_step), tol);
  } else if (check == "lipschitz") {
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-9;
    rep = lipschitz_check(scn.phi, scn.omega, make_curves(scn, opt.seed, 100, T, h_step), 1.01,
                          tol);
  } else if (check == "holder") {
    rep = holder_modulus(scn.phi, scn.vertical_axes, scn.holder_alpha,
                         {1e-1, 1e-2, 1e-3, 1e-4}, opt.seed);
  } else if (check == "reduction") {
    rep = dimensional_reduction_check(reduction_input(scn), {0.1, 0.05, 0.025, 0.0125},
                                      std::min(level, 32));
  } else if (check == "dafermos") {
    if (scn.kind == "engel") throw UsageError("dafermos needs a step-2 or free scenario");
    ScalarField psi_hat, omega_hat;
    planar_fields(scn, psi_hat, omega_hat);
    const double eps = opt.eps > 0.0 ? opt.eps : 0.05;
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-5;
    const Characteristic curve =
        integrate(ProjectedFieldF(2, psi_hat, 2), Vec::Zero(2), T, h_step);
    rep = dafermos_identity(psi_hat, omega_hat, curve, eps, 512, tol);
  } else if (check == "translation") {
    if (scn.kind != "step2") throw UsageError("translation needs a step-2 scenario");
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-6;
    const int tlevel = opt.grid > 0 ? opt.grid : std::max(level, 256);
    const StepTwoAlgebra& A = *scn.algebra;
    Rng rng(opt.seed);
    rep.check = "translation";
    rep.tolerance = tol;
    rep.pass = true;
    const Box bump_box = scn.domain.shrunk(0.5);
    for (int k = 0; k < 10; ++k) {
      GroupPoint q = A.identity();
      for (int a = 0; a < A.rank(); ++a) q.x[a] = rng.uniform(-0.2, 0.2);
      for (int a = 0; a < A.vertical_dim(); ++a) q.ystar[a] = rng.uniform(-0.2, 0.2);
      std::vector<BumpTest> bumps;
      for (int b = 0; b < 3; ++b) bumps.push_back(BumpTest::random_in(bump_box, rng));
      for (int j = 2; j <= A.rank(); ++j) {
        const VerificationReport sub = translation_invariance_check(
            A, scn.phi, scn.omega[j - 2], j, q, bumps, tlevel, tol);
        rep.values.insert(rep.values.end(), sub.values.begin(), sub.values.end());
        rep.pass = rep.pass && sub.pass;
      }
    }
    rep.params = {{"level", tlevel}, {"translations", 10}, {"bumps_per_translation", 3}};
  } else if (check == "lift-project") {
    if (scn.kind != "step2") throw UsageError("lift-project needs a step-2 scenario");
    const StepTwoAlgebra& A = *scn.algebra;
    const int m = A.rank(), np = pair_count(m);

    // Free-side box whose projection stays inside dom(phi).
    double bsum = 0.0;
    for (int i = 1; i <= A.vertical_dim(); ++i) {
      double s = 0.0;
      for (int l = 2; l <= m; ++l)
        for (int t = 1; t < l; ++t) s += std::abs(A.b(i, l, t));
      bsum = std::max(bsum, s);
    }
    Vec flo((m - 1) + np), fhi((m - 1) + np);
    for (int a = 0; a < m - 1; ++a) {
      flo[a] = scn.domain.lo[a];
      fhi[a] = scn.domain.hi[a];
    }
    const double vert = 0.9 / bsum;
    for (int k = 0; k < np; ++k) {
      flo[(m - 1) + k] = -vert;
      fhi[(m - 1) + k] = vert;
    }
    const Box free_box(flo, fhi);

    Vec cg = Vec::Zero(A.w_dim()), rg(A.w_dim());
    for (int a = 0; a < m - 1; ++a) rg[a] = 0.35;
    for (int a = m - 1; a < A.w_dim(); ++a) rg[a] = 0.15;
    const BumpTest xi_G(cg, rg);
    const int extra = np - A.vertical_dim();
    const int flevel = std::min(level, 32);
    rep.check = "lift-project";
    rep.pass = true;
    const int j = 2;
    if (extra > 0) {
      const BumpTest eta(Vec::Zero(extra), Vec::Constant(extra, 0.15));
      const VerificationReport res =
          lift_residual_check(A, scn.phi, scn.omega[j - 2], j, xi_G, eta, free_box, flevel);
      rep.values.insert(rep.values.end(), res.values.begin(), res.values.end());
      rep.params["residual"] = res.params;
      rep.pass = rep.pass && res.pass;
    } else {
      // h = m(m-1)/2: the lift is a relabelling; the plain F residual stands in.
      const ScalarField psi = lift_graph(A, scn.phi, free_box);
      const ScalarField omega_pulled = lift_graph(A, scn.omega[j - 2], free_box);
      const BumpTest xi_F(cg, rg);
      const double res_F = weak_residual_F(m, psi, omega_pulled, j, xi_F, level);
      const double res_G = weak_residual_G(A, scn.phi, scn.omega[j - 2], j, xi_G, level);
      rep.values = {std::abs(res_F), std::abs(res_G)};
      rep.pass = std::abs(res_F) <= 2.0 * std::abs(res_G);
    }

    const double Tc = 0.25, hc = opt.step > 0.0 ? opt.step : Tc / 512.0;
    Vec blo(free_box.dim()), bhi(free_box.dim());
    for (int a = 0; a < m - 1; ++a) {
      blo[a] = -0.45;
      bhi[a] = 0.45;
    }
    for (int k = 0; k < np; ++k) {
      blo[(m - 1) + k] = -0.15;
      bhi[(m - 1) + k] = 0.15;
    }
    const Box base_box(blo, bhi);
    Rng rng(opt.seed);
    std::vector<Vec> bases;
    for (int k = 0; k < 10; ++k) bases.push_back(rng.point_in(base_box));
    const VerificationReport cov =
        projection_covariance_check(A, scn.phi, free_box, j, bases, Tc, hc);
    rep.values.insert(rep.values.end(), cov.values.begin(), cov.values.end());
    rep.params["covariance"] = cov.params;
    rep.params["defect_tolerance"] = cov.tolerance;
    rep.tolerance = 2.0;
    rep.pass = rep.pass && cov.pass;
  }

  rep.scenario = scn.id;
  rep.seed = opt.seed;
  return rep;
}

int run_verify(const RunOptions& opt, std::ostream& log) {
  Scenario scn;
  try {
    scn = load_scenario(opt.scenario);
  } catch (const std::exception& e) {
    log << "usage error: " << e.what() << "\n";
    return 2;
  }

  VerificationReport rep;
  try {
    rep = run_check(scn, opt);
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    log << "check failed to run: " << e.what() << "\n";
    rep.check = opt.check;
    rep.scenario = scn.id;
    rep.seed = opt.seed;
    rep.params = {{"error", e.what()}};
    rep.pass = false;
  }

  std::filesystem::create_directories(opt.out_dir);
  const std::string stem = opt.out_dir + "/" + scn.id + "_" + opt.check;
  {
    std::ofstream out(stem + "_report.json");
    out << rep.to_json().dump(2) << "\n";
  }
  {
    std::ofstream out(stem + "_data.csv");
    out << check_csv(rep);
  }
  write_plots(scn, opt, rep, stem);
  log << (rep.pass ? "PASS" : "FAIL") << " " << scn.id << " " << opt.check
      << " (report: " << stem << "_report.json)\n";
  return rep.pass ? 0 : 1;
}

std::vector<ScenarioInfo> list_scenarios(const std::vector<std::string>& extra_paths) {
  std::vector<ScenarioInfo> out;
  for (const std::string& id : builtin_scenario_ids()) {
    const Scenario s = builtin_scenario(id);
    out.push_back({s.id, s.kind, s.note});
  }
  for (const std::string& path : extra_paths) {
    const Scenario s = load_scenario(path);
    out.push_back({s.id, s.kind, s.note});
  }
  return out;
}

}  // namespace carnot
