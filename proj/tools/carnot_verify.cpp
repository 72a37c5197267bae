#include "carnot/runner.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Step-2 Carnot group intrinsic-graph verification driver"};
  app.require_subcommand(1);

  carnot::RunOptions opt;
  const char* env_out = std::getenv("CARNOT_VERIFY_OUT");
  opt.out_dir = env_out ? env_out : ".";

  CLI::App* run = app.add_subcommand("run", "run one check on one scenario");
  run->add_option("--scenario", opt.scenario, "scenario id or path to a scenario JSON")
      ->required();
  std::string checks_help = "check name:";
  for (const std::string& c : carnot::check_names()) checks_help += " " + c;
  run->add_option("--check", opt.check, checks_help)->required();
  run->add_option("--tol", opt.tol, "tolerance override");
  run->add_option("--grid", opt.grid, "quadrature nodes per axis override");
  run->add_option("--step", opt.step, "characteristic step size override");
  run->add_option("--eps", opt.eps, "strip width override (dafermos)");
  run->add_option("--seed", opt.seed, "random seed recorded in the report");
  run->add_option("--out", opt.out_dir, "output directory for report/CSV/SVG");

  std::vector<std::string> extra;
  CLI::App* list = app.add_subcommand("list", "list registered scenarios");
  list->add_option("--scenario-file", extra, "additional scenario JSON files to register");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return carnot::run_verify(opt, std::cout);
    for (const carnot::ScenarioInfo& s : carnot::list_scenarios(extra))
      std::cout << s.id << "\t" << s.kind << "\t" << s.note << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
