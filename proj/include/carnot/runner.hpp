#ifndef CARNOT_RUNNER_HPP
#define CARNOT_RUNNER_HPP

#include "carnot/scenario.hpp"
#include "carnot/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace carnot {

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"distributional", "broadstar", "lipschitz",
                                                 "holder",         "reduction", "dafermos",
                                                 "translation",    "lift-project"};
  return names;
}

struct RunOptions {
  std::string scenario;
  std::string check;
  double tol = 0.0;         // 0 = per-check default
  int grid = 0;             // quadrature level override
  double step = 0.0;        // h_step override
  double eps = 0.0;         // strip width override (dafermos)
  std::uint64_t seed = 42;
  std::string out_dir = ".";
};

/// Runs one check on one scenario, writes the JSON report, CSV data and an
/// SVG plot under out_dir. Exit contract: 0 pass, 1 numeric failure,
/// 2 usage error (unknown scenario/check or unsupported combination).
int run_verify(const RunOptions& opt, std::ostream& log);

/// Same, returning the report for in-process callers.
VerificationReport run_check(const Scenario& scn, const RunOptions& opt);

struct ScenarioInfo {
  std::string id;
  std::string kind;
  std::string note;
};

std::vector<ScenarioInfo> list_scenarios(const std::vector<std::string>& extra_paths = {});

}  // namespace carnot

#endif
