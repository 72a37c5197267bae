#ifndef CARNOT_SCENARIO_HPP
#define CARNOT_SCENARIO_HPP

#include "carnot/algebra.hpp"
#include "carnot/scalar_field.hpp"
#include "carnot/types.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace carnot {

/// A named verification setup: the group (or the Engel/free marker), the
/// graph function phi, the datum omega, the W-domain and default numerics.
struct Scenario {
  std::string id;
  std::string kind;  // "step2" | "free" | "engel"
  std::optional<StepTwoAlgebra> algebra;  // step2
  int rank = 0;                           // free
  ScalarField phi;
  VectorField omega;  // j = 2..m (engel: the X2 equation only)
  Box domain;
  std::string note;

  int level = 128;        // default quadrature nodes per axis
  double T = 0.5;         // characteristic horizon
  double h_step = 0.5 / 512.0;
  Box seed_box;           // where characteristic bases are drawn
  std::vector<int> vertical_axes;
  double holder_alpha = 0.5;

  int w_dim() const { return domain.dim(); }
  int m() const;  // horizontal rank (engel: 2 usable equations, but only X2 carries a datum)
};

std::vector<std::string> builtin_scenario_ids();
Scenario builtin_scenario(const std::string& id);

/// User scenario from a JSON document (closed-form ids or CSV fields).
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::string& id_or_path);

}  // namespace carnot

#endif
