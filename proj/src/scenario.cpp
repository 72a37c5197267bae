#include "carnot/scenario.hpp"

#include "carnot/free.hpp"
#include "carnot/graphs.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

namespace carnot {

int Scenario::m() const {
  if (kind == "step2") return algebra->rank();
  if (kind == "free") return rank;
  return 2;
}

namespace {

Box box_from_json(const nlohmann::json& j) {
  const auto& lo = j.at("lo");
  const auto& hi = j.at("hi");
  Vec l(lo.size()), h(hi.size());
  for (std::size_t a = 0; a < lo.size(); ++a) l[a] = lo[a].get<double>();
  for (std::size_t a = 0; a < hi.size(); ++a) h[a] = hi[a].get<double>();
  return Box(l, h);
}

ScalarField field_from_json(const nlohmann::json& j, const Box& domain) {
  if (j.contains("csv")) return ScalarField::from_csv(j.at("csv").get<std::string>());
  const std::string form = j.at("form").get<std::string>();
  if (form == "const") return ScalarField::constant(domain, j.at("value").get<double>());
  if (form == "coordinate") return ScalarField::coordinate(domain, j.at("axis").get<int>());
  if (form == "cbrt") {
    const int axis = j.at("axis").get<int>();
    return ScalarField::closed_form(domain, [axis](const Vec& w) { return std::cbrt(w[axis]); },
                                    std::vector<int>{axis});
  }
  throw std::invalid_argument("scenario: unknown field form '" + form + "'");
}

}  // namespace

std::vector<std::string> builtin_scenario_ids() {
  return {"heisenberg1", "intro5d", "free3", "engel-counterexample"};
}

Scenario builtin_scenario(const std::string& id) {
  Scenario s;
  s.id = id;
  if (id == "heisenberg1") {
    s.kind = "step2";
    s.algebra = StepTwoAlgebra::heisenberg();
    s.domain = Box::cube(2, -1.0, 1.0);
    s.phi = ScalarField::coordinate(s.domain, 0);
    s.omega = {ScalarField::constant(s.domain, 1.0)};
    s.note = "first Heisenberg group; planar Burgers characteristics";
    s.level = 256;
    s.vertical_axes = {1};
  } else if (id == "intro5d") {
    s.kind = "step2";
    s.algebra = StepTwoAlgebra::rank3_dim5();
    s.domain = Box::cube(4, -1.0, 1.0);
    s.phi = ScalarField::coordinate(s.domain, 0);
    s.omega = {ScalarField::constant(s.domain, 1.0), ScalarField::constant(s.domain, 0.0)};
    s.note = "rank-3 group of dimension 5 with two coupled vertical nonlinearities";
    s.level = 64;
    s.vertical_axes = {2, 3};
  } else if (id == "free3") {
    s.kind = "free";
    s.rank = 3;
    s.domain = Box::cube(5, -1.0, 1.0);
    s.phi = ScalarField::coordinate(s.domain, 0);
    s.omega = {ScalarField::constant(s.domain, 1.0), ScalarField::constant(s.domain, 0.0)};
    s.note = "free step-2 group of rank 3";
    s.level = 24;
    s.vertical_axes = {2, 3, 4};
  } else if (id == "engel-counterexample") {
    s.kind = "engel";
    s.domain = Box::cube(3, -1.0, 1.0);
    s.phi = ScalarField::closed_form(s.domain, [](const Vec& w) { return std::cbrt(w[2]); },
                                     std::vector<int>{2});
    s.omega = {ScalarField::constant(s.domain, 1.0 / 6.0)};
    s.note = "step-3 Engel group; cube-root graph where the half-Hoelder equivalence fails";
    s.level = 128;
    s.vertical_axes = {2};
    s.holder_alpha = 1.0 / 3.0;
    Vec lo(3), hi(3);
    lo << -0.45, -0.45, 0.2;
    hi << 0.45, 0.45, 0.45;
    s.seed_box = Box(lo, hi);
    return s;
  } else {
    throw std::invalid_argument("unknown scenario '" + id + "'");
  }
  s.seed_box = s.domain.shrunk(0.45);
  return s;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario s;
  s.id = j.at("id").get<std::string>();
  s.kind = j.at("kind").get<std::string>();
  if (s.kind != "step2" && s.kind != "free" && s.kind != "engel")
    throw std::invalid_argument("scenario: kind must be step2, free or engel");
  s.domain = box_from_json(j.at("domain"));
  if (s.kind == "step2") {
    s.algebra = StepTwoAlgebra::from_json(j.at("algebra"));
    if (s.domain.dim() != s.algebra->w_dim())
      throw std::invalid_argument("scenario: domain does not match the W of the algebra");
  } else if (s.kind == "free") {
    s.rank = j.at("rank").get<int>();
    if (s.domain.dim() != (s.rank - 1) + pair_count(s.rank))
      throw std::invalid_argument("scenario: domain does not match the free W");
  } else if (s.domain.dim() != 3) {
    throw std::invalid_argument("scenario: the Engel W is three-dimensional");
  }
  s.phi = field_from_json(j.at("phi"), s.domain);
  for (const auto& oj : j.at("omega")) s.omega.push_back(field_from_json(oj, s.domain));
  const std::size_t expected = s.kind == "engel" ? 1 : static_cast<std::size_t>(s.m() - 1);
  if (s.omega.size() != expected)
    throw std::invalid_argument("scenario: omega must have one component per equation");
  s.note = j.value("note", std::string("user scenario"));
  s.level = j.value("level", 64);
  s.T = j.value("T", 0.5);
  s.h_step = j.value("h_step", s.T / 512.0);
  s.seed_box = j.contains("seed_box") ? box_from_json(j.at("seed_box")) : s.domain.shrunk(0.45);
  if (j.contains("vertical_axes"))
    for (const auto& a : j.at("vertical_axes")) s.vertical_axes.push_back(a.get<int>());
  s.holder_alpha = j.value("holder_alpha", 0.5);
  return s;
}

Scenario load_scenario(const std::string& id_or_path) {
  const auto ids = builtin_scenario_ids();
  if (std::find(ids.begin(), ids.end(), id_or_path) != ids.end())
    return builtin_scenario(id_or_path);
  if (std::filesystem::exists(id_or_path)) {
    std::ifstream in(id_or_path);
    nlohmann::json j;
    in >> j;
    return scenario_from_json(j);
  }
  throw std::invalid_argument("unknown scenario '" + id_or_path + "'");
}

}  // namespace carnot
