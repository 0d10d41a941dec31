#include <string>
#include <vector>

#include "CLI11.hpp"
#include "newtonflow/cli.hpp"

using newtonflow::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"newtonflow: exact event-driven solvers for the 1D Newtonian interaction flow"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "both";
  std::vector<double> times;
  int sigma = 0;
  std::uint64_t seed = 0;
  bool sigma_set = false, seed_set = false;
  double xmin = 0.0, xmax = 0.0;
  bool xmin_set = false, xmax_set = false;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario) {
    if (needs_scenario) {
      cmd->add_option("--scenario", config.scenario_path, "scenario JSON path")->required();
    }
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--format", format, "csv|json|both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    cmd->add_option("--t", times, "sample times")->delimiter(',');
    cmd->add_option("--sigma", sigma, "interaction sign (+1 attractive, -1 repulsive)")
        ->check(CLI::IsMember({-1, 1}))
        ->each([&](const std::string&) { sigma_set = true; });
    cmd->add_option("--seed", seed, "seed for randomized suites")
        ->each([&](const std::string&) { seed_set = true; });
  };

  auto* solve = app.add_subcommand("solve", "evolve a scenario and emit profiles/traces");
  add_common(solve, true);
  solve->add_option("--xmin", xmin, "sample range left end")->each([&](const std::string&) { xmin_set = true; });
  solve->add_option("--xmax", xmax, "sample range right end")->each([&](const std::string&) { xmax_set = true; });
  solve->add_option("--nx", config.nx, "cdf samples per time");
  solve->add_option("--ns", config.ns, "quantile samples per time");

  auto* riemann = app.add_subcommand("riemann", "closed-form Riemann solution");
  add_common(riemann, false);
  riemann->add_option("--FL", config.FL, "left state")->required();
  riemann->add_option("--FR", config.FR, "right state")->required();
  riemann->add_option("--x0", config.x0, "jump position");
  riemann->add_option("--xmin", xmin, "sample range left end")->each([&](const std::string&) { xmin_set = true; });
  riemann->add_option("--xmax", xmax, "sample range right end")->each([&](const std::string&) { xmax_set = true; });
  riemann->add_option("--nx", config.nx, "cdf samples per time");

  auto* equivalence = app.add_subcommand("equivalence", "three-way solver agreement report");
  add_common(equivalence, true);

  auto* converge = app.add_subcommand("converge", "particle convergence study (repulsive)");
  add_common(converge, true);

  auto* contract = app.add_subcommand("contract", "randomized contraction suites");
  add_common(contract, true);
  contract->add_option("--trials", config.trials, "random pairs per run");

  auto* subdiff = app.add_subcommand("subdiff", "subdifferential field and extended plan");
  add_common(subdiff, true);

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) config.command = RunConfig::Command::solve;
  if (riemann->parsed()) config.command = RunConfig::Command::riemann;
  if (equivalence->parsed()) config.command = RunConfig::Command::equivalence;
  if (converge->parsed()) config.command = RunConfig::Command::converge;
  if (contract->parsed()) config.command = RunConfig::Command::contract;
  if (subdiff->parsed()) config.command = RunConfig::Command::subdiff;

  config.format = format == "csv"    ? RunConfig::Format::csv
                  : format == "json" ? RunConfig::Format::json
                                     : RunConfig::Format::both;
  config.times_override = times;
  if (sigma_set) config.sigma_override = sigma;
  if (seed_set) config.seed_override = seed;
  if (xmin_set) config.x_min = xmin;
  if (xmax_set) config.x_max = xmax;

  return newtonflow::run(config);
}
