#ifndef NEWTONFLOW_CLI_HPP
#define NEWTONFLOW_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newtonflow {

// One validated entry point for every command. Scenario files carry the
// measure, sigma, times, N grid, and seed; flags may override scalars.
struct RunConfig {
  enum class Command { solve, riemann, equivalence, converge, contract, subdiff };
  enum class Format { csv, json, both };

  Command command = Command::solve;
  std::string scenario_path;
  std::string out_dir = ".";
  Format format = Format::both;

  std::vector<double> times_override;
  std::optional<int> sigma_override;
  std::optional<std::uint64_t> seed_override;

  // riemann data
  double FL = 0.0;
  double FR = 1.0;
  double x0 = 0.0;

  // sample grids
  std::optional<double> x_min, x_max;
  int nx = 201;
  int ns = 200;

  int trials = 200;
};

// Exit status: 0 success, 1 assertion/verification failure, 2 config error.
int run(const RunConfig& config);

}  // namespace newtonflow

#endif
