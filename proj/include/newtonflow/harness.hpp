#ifndef NEWTONFLOW_HARNESS_HPP
#define NEWTONFLOW_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "newtonflow/measure.hpp"
#include "newtonflow/scenario.hpp"

namespace newtonflow {

// Cross-formulation agreement at one time: the gradient-flow measure (C1),
// the measure carried by the entropy solution's CDF (C2), and the measure of
// the L^2 quantile flow (C3).
struct EquivalenceRow {
  double t;
  double dw_flow_entropy;      // d_W(C1, C2)
  double dw_flow_l2;           // d_W(C1, C3)
  double dw_entropy_l2;        // d_W(C2, C3)
  double quantile_discrepancy; // ||X_C1 - X_C2||_{L^2}
  bool pass;
};

struct EquivalenceReport {
  std::vector<EquivalenceRow> rows;
  bool discretized = false;  // attractive continuum data was sampled first
  double tolerance = 1e-10;
  bool pass = false;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

EquivalenceReport check_equivalence(const Scenario& sc);

// Mid-mass placement X_j = X_mu((2j-1)/(2N)); each particle carries 1/N.
std::vector<double> particle_positions_init(const Measure1D& mu0, int N);

// Repulsive free flight x_j(t) = X_j + t (2j-1-N)/N as an empirical measure;
// positions coincide bit-for-bit with the discretized-flux shock fronts.
Measure1D repulsive_particle_flow(const std::vector<double>& positions, int N, double t);

struct ConvergenceRow {
  int N;
  double t;
  double dw;          // d_W(mu^N(t), mu(t)), exact
  double initial_gap; // ||X_0 - X_0^N||
  double bound;       // initial_gap + t/N
  bool bound_ok;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool pass = false;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

ConvergenceReport convergence_study(const Scenario& sc);

// Randomized pairs evolved under all three formulations; checks the d_W, L^1,
// and L^2 contraction inequalities within 1e-10 and records the worst ratios.
struct ContractionReport {
  int sigma = -1;
  int trials = 0;
  double max_ratio_w2 = 0.0;
  double max_ratio_l1 = 0.0;
  double max_ratio_l2 = 0.0;
  int violations = 0;
  nlohmann::json witnesses = nlohmann::json::array();
  bool pass = false;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

ContractionReport contraction_suite(std::uint64_t seed, int sigma, int trials);

}  // namespace newtonflow

#endif
