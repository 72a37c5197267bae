#include "carnot/characteristics.hpp"

#include "carnot/free.hpp"
#include "carnot/graphs.hpp"
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace carnot;

namespace {

const StepTwoAlgebra& H() {
  static const StepTwoAlgebra h = StepTwoAlgebra::heisenberg();
  return h;
}

}  // namespace

TEST_CASE("zero field gives straight lines") {
  const Box box = Box::cube(2, -2.0, 2.0);
  const ScalarField zero = ScalarField::constant(box, 0.0);
  const Characteristic c = integrate(ProjectedFieldG(H(), zero, 2), Vec::Zero(2), 1.0, 1.0 / 256);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(c.states[k][0] == c.times[k]);
    CHECK(c.states[k][1] == 0.0);
  }
  CHECK(c.times.front() == doctest::Approx(-1.0));
  CHECK(c.times.back() == doctest::Approx(1.0));
  CHECK(c.times[c.base_index] == 0.0);
}

TEST_CASE("Burgers characteristic of phi = x2 from the origin") {
  const Box box = Box::cube(2, -2.0, 2.0);
  const ScalarField phi = ScalarField::coordinate(box, 0);
  const double h = 1.0 / 512;
  const Characteristic c = integrate(ProjectedFieldG(H(), phi, 2), Vec::Zero(2), 1.0, h);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double t = c.times[k];
    CHECK(c.states[k][0] == doctest::Approx(t));
    CHECK(c.states[k][1] == doctest::Approx(0.5 * t * t).epsilon(1e-12));
  }
}

TEST_CASE("Engel characteristic against the separable closed form") {
  const Box box = Box::cube(3, -4.0, 4.0);
  const ScalarField phi = ScalarField::closed_form(
      box, [](const Vec& w) { return std::cbrt(w[2]); }, std::vector<int>{2});
  Vec a(3);
  a << 0.0, 0.0, 1.0;
  const double T = 1.0, h = T / 512;
  const Characteristic c = integrate(EngelField(phi, EngelGenerator::X2), a, T, h);
  REQUIRE(!c.exited);
  for (std::size_t k = c.base_index; k < c.size(); k += 64) {
    const double t = c.times[k];
    const double x4 = std::pow(1.0 + t / 6.0, 3);
    CHECK(c.states[k][2] == doctest::Approx(x4).epsilon(1e-9));
    CHECK(c.states[k][1] == doctest::Approx(t + t * t / 12.0).epsilon(1e-9));
  }
}

TEST_CASE("affine slots advance without truncation error") {
  const Box box = Box::cube(5, -4.0, 4.0);
  const ScalarField psi = ScalarField::closed_form(
      box, [](const Vec& w) { return std::sin(w[0]) + 0.3 * w[2]; }, std::vector<int>{0, 2});
  Vec a = Vec::Zero(5);
  a[w_axis_x(3)] = 0.8;  // x3 constant along a j=2 curve
  a[w_axis_pair(3, pair_pos(3, 2, 3))] = 0.25;
  const Characteristic c = integrate(ProjectedFieldF(3, psi, 2), a, 0.5, 0.5 / 512);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double t = c.times[k];
    CHECK(c.states[k][w_axis_x(3)] == 0.8);
    CHECK(c.states[k][w_axis_pair(3, pair_pos(3, 2, 3))] ==
          doctest::Approx(0.25 + 0.5 * 0.8 * t).epsilon(1e-13));
    CHECK(c.states[k][w_axis_pair(3, pair_pos(3, 1, 3))] == 0.0);
  }
}

TEST_CASE("fourth-order convergence on a quartic time course") {
  // phi = x2^4 makes the nonlinear slot a pure quadrature of t^4, for which
  // the one-step error constant is exact and the halving ratio is 16.
  const Box box = Box::cube(2, -8.0, 8.0);
  const ScalarField phi = ScalarField::closed_form(
      box, [](const Vec& w) { return w[0] * w[0] * w[0] * w[0]; }, std::vector<int>{0});
  const double a2 = 0.3, T = 1.0;
  Vec a(2);
  a << a2, 0.0;
  auto terminal_error = [&](double h) {
    const Characteristic c = integrate(ProjectedFieldG(H(), phi, 2), a, T, h);
    const double exact = (std::pow(a2 + T, 5) - std::pow(a2, 5)) / 5.0;
    return std::abs(c.states.back()[1] - exact);
  };
  const double e128 = terminal_error(T / 128);
  const double e256 = terminal_error(T / 256);
  const double e512 = terminal_error(T / 512);
  CHECK(e128 / e256 == doctest::Approx(16.0).epsilon(0.02));
  CHECK(e256 / e512 == doctest::Approx(16.0).epsilon(0.02));
}

TEST_CASE("translating a characteristic") {
  const Box box = Box::cube(2, -3.0, 3.0);
  const ScalarField phi = ScalarField::coordinate(box, 0);
  const ProjectedFieldG D(H(), phi, 2);
  Vec a(2);
  a << 0.1, -0.2;
  const double T = 0.5, h = T / 512;
  const Characteristic gamma = integrate(D, a, T, h);

  const Characteristic same = translate_curve(H(), gamma, H().identity());
  for (std::size_t k = 0; k < gamma.size(); k += 100)
    CHECK((same.states[k] - gamma.states[k]).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    GroupPoint q = H().identity();
    q.x << rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3);
    q.ystar << rng.uniform(-0.3, 0.3);
    const Characteristic gq = translate_curve(H(), gamma, q);
    const ScalarField phi_q = translate_graph(H(), phi, q);

    // starting point q_W . q_L . gamma(0) . q_L^{-1}
    GroupPoint l = H().identity(), linv = H().identity();
    l.x[0] = pi_l(q);
    linv.x[0] = -pi_l(q);
    const GroupPoint start = group_mul(
        H(), embed_w(H(), pi_w(H(), q)),
        group_mul(H(), l, group_mul(H(), embed_w(H(), gamma.base), linv)));
    CHECK((gq.base - pi_w(H(), start)).cwiseAbs().maxCoeff() <= 1e-13);

    for (std::size_t k = 0; k < gamma.size(); k += 64) {
      // defining property pi_W(q^-1 . gamma_q(t)) = gamma(t)
      const Vec back = pi_w(H(), group_mul(H(), group_inv(H(), q), embed_w(H(), gq.states[k])));
      CHECK((back - gamma.states[k]).cwiseAbs().maxCoeff() <= 1e-12);
      // increment invariance
      CHECK(phi_q(gq.states[k]) - phi_q(gq.base) ==
            doctest::Approx(phi(gamma.states[k]) - phi(gamma.base)).epsilon(1e-10));
    }

    // translate-then-integrate equals integrate-the-translated-field
    const Characteristic direct = integrate(ProjectedFieldG(H(), phi_q, 2), gq.base, T, h);
    REQUIRE(!direct.exited);
    double defect = 0.0;
    for (std::size_t k = 0; k < gq.size(); ++k)
      defect = std::max(defect, (direct.states[k] - gq.states[k]).cwiseAbs().maxCoeff());
    CHECK(defect <= 10.0 * std::pow(h, 4));
  }
}

TEST_CASE("projecting free characteristics") {
  // constant graph function: both sides are affine and agree to roundoff
  {
    const Box gbox = Box::cube(2, -3.0, 3.0);
    const ScalarField c = ScalarField::constant(gbox, 0.7);
    const ScalarField cl = lift_graph(H(), c, Box::cube(2, -3.0, 3.0));
    const Characteristic cf = integrate(ProjectedFieldF(2, cl, 2), Vec::Zero(2), 0.5, 0.5 / 256);
    const Characteristic proj = project_curve(H(), cf);
    const Characteristic direct = integrate(ProjectedFieldG(H(), c, 2), Vec::Zero(2), 0.5, 0.5 / 256);
    for (std::size_t k = 0; k < proj.size(); k += 32)
      CHECK((proj.states[k] - direct.states[k]).cwiseAbs().maxCoeff() <= 1e-14);
  }

  // Heisenberg from rank 2: pi flips the sign of y21
  const Box gbox = Box::cube(2, -3.0, 3.0);
  const ScalarField phi = ScalarField::coordinate(gbox, 0);
  const Box fbox = Box::cube(2, -3.0, 3.0);
  const ScalarField psi = lift_graph(H(), phi, fbox);
  const double T = 0.5, h = T / 512;
  const Characteristic cf = integrate(ProjectedFieldF(2, psi, 2), Vec::Zero(2), T, h);
  const Characteristic proj = project_curve(H(), cf);
  const Characteristic direct = integrate(ProjectedFieldG(H(), phi, 2), Vec::Zero(2), T, h);
  for (std::size_t k = 0; k < proj.size(); k += 64) {
    CHECK(proj.states[k][1] == doctest::Approx(-cf.states[k][1]));
    CHECK((proj.states[k] - direct.states[k]).cwiseAbs().maxCoeff() <= 10.0 * std::pow(h, 4));
  }

  // rank-3 cover of the 5-dimensional group
  const StepTwoAlgebra A5 = StepTwoAlgebra::rank3_dim5();
  const Box g5 = Box::cube(4, -2.0, 2.0);
  const ScalarField phi5 = ScalarField::coordinate(g5, 0);
  const Box f5 = Box::cube(5, -0.9, 0.9);
  const ScalarField psi5 = lift_graph(A5, phi5, f5);
  Rng rng(52);
  for (int j = 2; j <= 3; ++j)
    for (int trial = 0; trial < 5; ++trial) {
      Vec base(5);
      for (int a = 0; a < 5; ++a) base[a] = rng.uniform(-0.2, 0.2);
      const Characteristic curve = integrate(ProjectedFieldF(3, psi5, j), base, 0.25, 0.25 / 512);
      REQUIRE(!curve.exited);
      const Characteristic p5 = project_curve(A5, curve);
      const Characteristic d5 =
          integrate(ProjectedFieldG(A5, phi5, j), project_w(A5, base), 0.25, 0.25 / 512);
      double defect = 0.0;
      for (std::size_t k = 0; k < p5.size(); ++k)
        defect = std::max(defect, (p5.states[k] - d5.states[k]).cwiseAbs().maxCoeff());
      CHECK(defect <= 10.0 * std::pow(0.25 / 512, 4));
    }
}

TEST_CASE("domain exit truncates the curve and reports the exit time") {
  const Box box = Box::cube(2, -0.25, 0.25);
  const ScalarField phi = ScalarField::constant(box, 0.0);
  const Characteristic c = integrate(ProjectedFieldG(H(), phi, 2), Vec::Zero(2), 1.0, 1.0 / 128);
  CHECK(c.exited);
  CHECK(std::abs(c.exit_time) < 1.0);
  CHECK(std::abs(c.exit_time) >= 0.2);
  for (const Vec& s : c.states) CHECK(box.contains(s, 1e-9));
}

TEST_CASE("quadrature along a curve") {
  const Box box = Box::cube(2, -3.0, 3.0);
  const ScalarField zero = ScalarField::constant(box, 0.0);
  const Characteristic line = integrate(ProjectedFieldG(H(), zero, 2), Vec::Zero(2), 1.0, 1.0 / 512);

  // quadratic integrand: Simpson is exact
  const ScalarField sq = ScalarField::closed_form(box, [](const Vec& w) { return w[0] * w[0]; });
  const std::vector<double> cum = integrate_along(line, sq);
  for (std::size_t k = 0; k < line.size(); k += 37) {
    const double t = line.times[k];
    CHECK(cum[k] == doctest::Approx(t * t * t / 3.0).epsilon(1e-12));
  }

  // smooth integrand: fourth-order accuracy
  const ScalarField sn = ScalarField::closed_form(box, [](const Vec& w) { return std::sin(w[0]); });
  const std::vector<double> cums = integrate_along(line, sn);
  for (std::size_t k = 0; k < line.size(); k += 41) {
    const double t = line.times[k];
    CHECK(cums[k] == doctest::Approx(1.0 - std::cos(t)).epsilon(1e-10));
  }
}

TEST_CASE("curve CSV export") {
  const Box box = Box::cube(2, -2.0, 2.0);
  const ScalarField phi = ScalarField::coordinate(box, 0);
  const Characteristic c = integrate(ProjectedFieldG(H(), phi, 2), Vec::Zero(2), 0.1, 0.1 / 16);
  const std::string path = std::filesystem::temp_directory_path() / "carnot_curve.csv";
  write_curve_csv(c, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,s0,s1");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == static_cast<int>(c.size()));
  std::remove(path.c_str());
}
