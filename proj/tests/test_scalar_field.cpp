#include "carnot/scalar_field.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace carnot;

TEST_CASE("closed forms and domain enforcement") {
  const Box box = Box::cube(2, -1.0, 1.0);
  const ScalarField f = ScalarField::closed_form(box, [](const Vec& w) { return w[0] - w[1]; });
  Vec in(2), out(2);
  in << 0.5, 0.25;
  out << 1.5, 0.0;
  CHECK(f(in) == 0.25);
  CHECK_THROWS_AS(f(out), DomainError);
  CHECK_THROWS_AS(f(Vec::Zero(3)), std::invalid_argument);

  CHECK(f.depends_on(0));
  CHECK(f.depends_on(1));  // undeclared: assume everything
  const ScalarField c = ScalarField::coordinate(box, 1);
  CHECK(c.depends_on(1));
  CHECK(!c.depends_on(0));
}

TEST_CASE("multilinear grids reproduce linear functions") {
  const Box box = Box::cube(2, 0.0, 1.0);
  const int n = 5;
  std::vector<double> values;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = i / double(n - 1), y = j / double(n - 1);
      values.push_back(2.0 * x - 3.0 * y + 0.5);
    }
  const ScalarField g = ScalarField::from_grid(box, {n, n}, values);
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    Vec w(2);
    w << rng.uniform(0, 1), rng.uniform(0, 1);
    CHECK(g(w) == doctest::Approx(2.0 * w[0] - 3.0 * w[1] + 0.5).epsilon(1e-12));
  }
  CHECK(g.is_grid());
  CHECK(g.sup_abs() == doctest::Approx(2.5));  // corner (1, 0)
}

TEST_CASE("cubic interpolation is exact on linear data and close on smooth data") {
  const Box box = Box::cube(1, 0.0, 1.0);
  const int n = 33;
  std::vector<double> lin(n), smooth(n);
  for (int i = 0; i < n; ++i) {
    const double x = i / double(n - 1);
    lin[i] = 4.0 * x - 1.0;
    smooth[i] = std::sin(3.0 * x);
  }
  const ScalarField gl = ScalarField::from_grid(box, {n}, lin, Interp::Cubic);
  const ScalarField gs = ScalarField::from_grid(box, {n}, smooth, Interp::Cubic);
  const ScalarField gs_lin = ScalarField::from_grid(box, {n}, smooth, Interp::Multilinear);
  Rng rng(62);
  double worst_cubic = 0.0, worst_lin = 0.0;
  for (int k = 0; k < 200; ++k) {
    Vec w(1);
    w << rng.uniform(0.05, 0.95);
    CHECK(gl(w) == doctest::Approx(4.0 * w[0] - 1.0).epsilon(1e-12));
    worst_cubic = std::max(worst_cubic, std::abs(gs(w) - std::sin(3.0 * w[0])));
    worst_lin = std::max(worst_lin, std::abs(gs_lin(w) - std::sin(3.0 * w[0])));
  }
  CHECK(worst_cubic < 0.1 * worst_lin);
}

TEST_CASE("grid construction validates shapes") {
  const Box box = Box::cube(2, 0.0, 1.0);
  CHECK_THROWS_AS(ScalarField::from_grid(box, {3}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ScalarField::from_grid(box, {2, 2}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ScalarField::from_grid(box, {1, 4}, {1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("CSV round trip, any row order") {
  namespace fs = std::filesystem;
  const std::string path = fs::temp_directory_path() / "carnot_field.csv";
  {
    std::ofstream out(path);
    out << "x2,ystar1,value\n";
    // 3 x 2 lattice, rows deliberately shuffled
    out << "0.5,0,2.5\n";
    out << "0,0,1\n";
    out << "1,1,0\n";
    out << "0,1,-1\n";
    out << "1,0,4\n";
    out << "0.5,1,-0.5\n";
  }
  const ScalarField f = ScalarField::from_csv(path);
  CHECK(f.dim() == 2);
  Vec w(2);
  w << 0.5, 0.0;
  CHECK(f(w) == doctest::Approx(2.5));
  w << 1.0, 1.0;
  CHECK(f(w) == doctest::Approx(0.0));
  w << 0.25, 0.0;  // halfway between the first two nodes
  CHECK(f(w) == doctest::Approx(0.5 * (1.0 + 2.5)));
  std::remove(path.c_str());
}

TEST_CASE("CSV loader rejects broken lattices") {
  namespace fs = std::filesystem;
  const std::string path = fs::temp_directory_path() / "carnot_bad.csv";
  {
    std::ofstream out(path);
    out << "x,value\n0,1\n0.1,2\n0.35,3\n";  // non-uniform spacing
  }
  CHECK_THROWS(ScalarField::from_csv(path));
  {
    std::ofstream out(path);
    out << "x,y,value\n0,0,1\n1,0,2\n0,1,3\n";  // missing the (1,1) sample
  }
  CHECK_THROWS(ScalarField::from_csv(path));
  std::remove(path.c_str());
}

TEST_CASE("sup estimation") {
  const Box box = Box::cube(1, -1.0, 1.0);
  const ScalarField f =
      ScalarField::closed_form(box, [](const Vec& w) { return w[0] * w[0] - 0.5; });
  CHECK(f.sup_abs(101) == doctest::Approx(0.5).epsilon(0.05));
  const ScalarField c = ScalarField::constant(box, -2.5);
  CHECK(c.sup_abs(3) == 2.5);
}
