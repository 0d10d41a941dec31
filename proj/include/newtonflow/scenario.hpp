#ifndef NEWTONFLOW_SCENARIO_HPP
#define NEWTONFLOW_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "newtonflow/measure.hpp"
#include "newtonflow/rng.hpp"

namespace newtonflow {

// One scenario file drives every command: the measure JSON of measure
// serialization plus sigma, sample times, particle-count grid, and seed.
struct Scenario {
  Measure1D initial;
  int sigma = -1;
  std::vector<double> times;          // sorted, non-negative
  std::vector<int> particle_counts;   // distinct N values for convergence runs
  std::uint64_t seed = 1;

  nlohmann::json to_json() const;
  static Scenario from_json(const nlohmann::json& j);
  static Scenario load(const std::string& path);
};

// Randomized measures for property suites: up to `max_atoms` atoms and
// `max_segments` segments, masses in multiples of 1/64 and positions on a
// coarse dyadic grid, so event arithmetic stays near-exact.
Measure1D random_atomic_measure(Rng& rng, int max_atoms = 12);
Measure1D random_continuous_measure(Rng& rng, int max_segments = 4);
Measure1D random_mixed_measure(Rng& rng, int max_atoms = 12, int max_segments = 4);

}  // namespace newtonflow

#endif
