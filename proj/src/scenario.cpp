#include "newtonflow/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace newtonflow {

nlohmann::json Scenario::to_json() const {
  nlohmann::json j = initial.to_json();
  j["sigma"] = sigma;
  j["times"] = times;
  j["N"] = particle_counts;
  j["seed"] = seed;
  return j;
}

Scenario Scenario::from_json(const nlohmann::json& j) {
  Scenario sc{Measure1D::from_json(j), -1, {}, {}, 1};
  if (j.contains("sigma")) sc.sigma = j.at("sigma").get<int>();
  if (sc.sigma != 1 && sc.sigma != -1) throw std::invalid_argument("Scenario: sigma must be +-1");
  if (j.contains("times")) sc.times = j.at("times").get<std::vector<double>>();
  for (double t : sc.times) {
    if (t < 0.0) throw std::invalid_argument("Scenario: times must be non-negative");
  }
  std::sort(sc.times.begin(), sc.times.end());
  if (j.contains("N")) {
    sc.particle_counts = j.at("N").get<std::vector<int>>();
    for (int n : sc.particle_counts) {
      if (n < 1) throw std::invalid_argument("Scenario: N values must be positive");
    }
    std::sort(sc.particle_counts.begin(), sc.particle_counts.end());
    auto last = std::unique(sc.particle_counts.begin(), sc.particle_counts.end());
    if (last != sc.particle_counts.end()) {
      throw std::invalid_argument("Scenario: N values must be distinct");
    }
  }
  if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();
  return sc;
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("Scenario: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

namespace {

// Split 64 mass units over n pieces, each at least one unit.
std::vector<double> random_masses(Rng& rng, int n) {
  std::vector<int> units(n, 1);
  for (int k = n; k < 64; ++k) units[rng.next_int(0, n - 1)] += 1;
  std::vector<double> masses(n);
  for (int i = 0; i < n; ++i) masses[i] = units[i] / 64.0;
  return masses;
}

double grid_position(Rng& rng) { return rng.next_int(-32, 32) / 8.0; }

}  // namespace

Measure1D random_atomic_measure(Rng& rng, int max_atoms) {
  int n = rng.next_int(1, max_atoms);
  std::vector<double> masses = random_masses(rng, n);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back({grid_position(rng), masses[i]});
  return Measure1D(std::move(atoms), {});
}

Measure1D random_continuous_measure(Rng& rng, int max_segments) {
  int n = rng.next_int(1, max_segments);
  std::vector<double> masses = random_masses(rng, n);
  std::vector<Segment> segments;
  for (int i = 0; i < n; ++i) {
    double a = grid_position(rng);
    double w = rng.next_int(1, 16) / 8.0;
    segments.push_back({a, a + w, masses[i]});
  }
  return Measure1D({}, std::move(segments));
}

Measure1D random_mixed_measure(Rng& rng, int max_atoms, int max_segments) {
  int na = rng.next_int(0, max_atoms);
  int ns = rng.next_int(na == 0 ? 1 : 0, max_segments);
  int n = na + ns;
  std::vector<double> masses = random_masses(rng, n);
  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  for (int i = 0; i < na; ++i) atoms.push_back({grid_position(rng), masses[i]});
  for (int i = 0; i < ns; ++i) {
    double a = grid_position(rng);
    double w = rng.next_int(1, 16) / 8.0;
    segments.push_back({a, a + w, masses[na + i]});
  }
  return Measure1D(std::move(atoms), std::move(segments));
}

}  // namespace newtonflow
