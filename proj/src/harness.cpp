#include "newtonflow/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "newtonflow/entropy_solution.hpp"
#include "newtonflow/format.hpp"
#include "newtonflow/metrics.hpp"
#include "newtonflow/particle_flow.hpp"
#include "newtonflow/quantile_flow.hpp"
#include "newtonflow/transforms.hpp"

namespace newtonflow {

std::vector<double> particle_positions_init(const Measure1D& mu0, int N) {
  if (N < 1) throw std::invalid_argument("particle_positions_init: N must be positive");
  PiecewiseLinear X = quantile_of(mu0);
  std::vector<double> positions(N);
  for (int j = 1; j <= N; ++j) {
    positions[j - 1] = X((2.0 * j - 1.0) / (2.0 * N));
  }
  return positions;
}

Measure1D repulsive_particle_flow(const std::vector<double>& positions, int N, double t) {
  if (static_cast<int>(positions.size()) != N) {
    throw std::invalid_argument("repulsive_particle_flow: positions size must equal N");
  }
  if (!std::is_sorted(positions.begin(), positions.end())) {
    throw std::invalid_argument("repulsive_particle_flow: positions must be sorted");
  }
  std::vector<Atom> atoms;
  atoms.reserve(positions.size());
  for (int j = 1; j <= N; ++j) {
    double speed = static_cast<double>(2 * j - 1 - N) / N;
    atoms.push_back({positions[j - 1] + speed * (t - 0.0), 1.0 / N});
  }
  return Measure1D(std::move(atoms), {});
}

namespace {

Measure1D gradient_flow_measure(const Measure1D& mu0, int sigma, double t) {
  if (sigma == 1) return attractive_particle_flow(mu0, t).to_measure();
  return repulsive_flow(mu0, t);
}

EquivalenceRow equivalence_row(const Measure1D& mu0, int sigma, double t, double tol) {
  Measure1D c1 = gradient_flow_measure(mu0, sigma, t);
  Measure1D c2 = measure_of(EntropySolution::solve(mu0, sigma).cdf_at(t));
  Measure1D c3 = measure_of(l2_flow(quantile_of(mu0), sigma, t));
  EquivalenceRow row;
  row.t = t;
  row.dw_flow_entropy = wasserstein2(c1, c2);
  row.dw_flow_l2 = wasserstein2(c1, c3);
  row.dw_entropy_l2 = wasserstein2(c2, c3);
  row.quantile_discrepancy = l2_distance01(quantile_of(c1), quantile_of(c2));
  row.pass = row.dw_flow_entropy < tol && row.dw_flow_l2 < tol && row.dw_entropy_l2 < tol &&
             row.quantile_discrepancy < tol;
  return row;
}

}  // namespace

EquivalenceReport check_equivalence(const Scenario& sc) {
  EquivalenceReport report;
  Measure1D mu0 = sc.initial;
  if (sc.sigma == 1 && !mu0.is_atomic()) {
    // Attractive continuum data: exact routes need atoms, so compare the
    // solvers on a fine particle sampling and widen the tolerance by the
    // sampling error.
    const int N = 2048;
    Measure1D sampled = repulsive_particle_flow(particle_positions_init(mu0, N), N, 0.0);
    report.discretized = true;
    report.tolerance = wasserstein2(sampled, mu0) + 1e-8;
    mu0 = sampled;
  }
  report.pass = true;
  for (double t : sc.times) {
    report.rows.push_back(equivalence_row(mu0, sc.sigma, t, report.tolerance));
    report.pass = report.pass && report.rows.back().pass;
  }
  return report;
}

nlohmann::json EquivalenceReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["discretized"] = discretized;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["rows"] = nlohmann::json::array();
  for (const EquivalenceRow& r : rows) {
    j["rows"].push_back({{"t", r.t},
                         {"dw_flow_entropy", r.dw_flow_entropy},
                         {"dw_flow_l2", r.dw_flow_l2},
                         {"dw_entropy_l2", r.dw_entropy_l2},
                         {"quantile_discrepancy", r.quantile_discrepancy},
                         {"pass", r.pass}});
  }
  return j;
}

std::string EquivalenceReport::to_csv() const {
  std::ostringstream out;
  out << "# " << kSchemaTag << "\n";
  out << "t,dw_flow_entropy,dw_flow_l2,dw_entropy_l2,quantile_discrepancy,pass\n";
  for (const EquivalenceRow& r : rows) {
    out << fmt17(r.t) << ',' << fmt17(r.dw_flow_entropy) << ',' << fmt17(r.dw_flow_l2) << ','
        << fmt17(r.dw_entropy_l2) << ',' << fmt17(r.quantile_discrepancy) << ','
        << (r.pass ? 1 : 0) << "\n";
  }
  return out.str();
}

ConvergenceReport convergence_study(const Scenario& sc) {
  if (sc.sigma != -1) {
    throw std::invalid_argument("convergence_study: the particle scheme is the repulsive path");
  }
  ConvergenceReport report;
  report.pass = true;
  for (int N : sc.particle_counts) {
    std::vector<double> positions = particle_positions_init(sc.initial, N);
    double gap0 = wasserstein2(repulsive_particle_flow(positions, N, 0.0), sc.initial);
    for (double t : sc.times) {
      ConvergenceRow row;
      row.N = N;
      row.t = t;
      row.dw = wasserstein2(repulsive_particle_flow(positions, N, t), repulsive_flow(sc.initial, t));
      row.initial_gap = gap0;
      row.bound = gap0 + t / N;
      row.bound_ok = row.dw <= row.bound + 1e-12;
      report.pass = report.pass && row.bound_ok;
      report.rows.push_back(row);
    }
  }
  return report;
}

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["pass"] = pass;
  j["rows"] = nlohmann::json::array();
  for (const ConvergenceRow& r : rows) {
    j["rows"].push_back({{"N", r.N},
                         {"t", r.t},
                         {"dw", r.dw},
                         {"initial_gap", r.initial_gap},
                         {"bound", r.bound},
                         {"bound_ok", r.bound_ok}});
  }
  return j;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out << "# " << kSchemaTag << "\n";
  out << "N,t,dw,initial_gap,bound,bound_ok\n";
  for (const ConvergenceRow& r : rows) {
    out << r.N << ',' << fmt17(r.t) << ',' << fmt17(r.dw) << ',' << fmt17(r.initial_gap) << ','
        << fmt17(r.bound) << ',' << (r.bound_ok ? 1 : 0) << "\n";
  }
  return out.str();
}

ContractionReport contraction_suite(std::uint64_t seed, int sigma, int trials) {
  if (trials < 1) throw std::invalid_argument("contraction_suite: trials must be positive");
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("contraction_suite: sigma must be +-1");
  Rng rng(seed);
  ContractionReport report;
  report.sigma = sigma;
  report.trials = trials;
  report.pass = true;

  for (int trial = 0; trial < trials; ++trial) {
    Measure1D mu = sigma == 1 ? random_atomic_measure(rng) : random_mixed_measure(rng);
    Measure1D nu = sigma == 1 ? random_atomic_measure(rng) : random_mixed_measure(rng);
    double d0_w2 = wasserstein2(mu, nu);
    double d0_l1 = wasserstein1(mu, nu);
    double d0_l2 = l2_distance01(quantile_of(mu), quantile_of(nu));

    EntropySolution emu = EntropySolution::solve(mu, sigma);
    EntropySolution enu = EntropySolution::solve(nu, sigma);

    for (int k = 0; k < 3; ++k) {
      double t = 0.125 * (1 + rng.next_int(0, 39));  // dyadic grid in (0, 5]
      double d_w2 = wasserstein2(gradient_flow_measure(mu, sigma, t),
                                 gradient_flow_measure(nu, sigma, t));
      double d_l1 = l1_distance_line(emu.cdf_at(t), enu.cdf_at(t));
      double d_l2 = l2_distance01(l2_flow(quantile_of(mu), sigma, t),
                                  l2_flow(quantile_of(nu), sigma, t));

      bool ok = d_w2 <= d0_w2 + 1e-10 && d_l1 <= d0_l1 + 1e-10 && d_l2 <= d0_l2 + 1e-10;
      if (!ok) {
        report.pass = false;
        report.violations += 1;
        report.witnesses.push_back({{"trial", trial},
                                    {"t", t},
                                    {"mu", mu.to_json()},
                                    {"nu", nu.to_json()},
                                    {"d0", {d0_w2, d0_l1, d0_l2}},
                                    {"dt", {d_w2, d_l1, d_l2}}});
      }
      if (d0_w2 > 0.0) report.max_ratio_w2 = std::max(report.max_ratio_w2, d_w2 / d0_w2);
      if (d0_l1 > 0.0) report.max_ratio_l1 = std::max(report.max_ratio_l1, d_l1 / d0_l1);
      if (d0_l2 > 0.0) report.max_ratio_l2 = std::max(report.max_ratio_l2, d_l2 / d0_l2);
    }
  }
  return report;
}

nlohmann::json ContractionReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["sigma"] = sigma;
  j["trials"] = trials;
  j["max_ratio_w2"] = max_ratio_w2;
  j["max_ratio_l1"] = max_ratio_l1;
  j["max_ratio_l2"] = max_ratio_l2;
  j["violations"] = violations;
  j["witnesses"] = witnesses;
  j["pass"] = pass;
  return j;
}

std::string ContractionReport::to_csv() const {
  std::ostringstream out;
  out << "# " << kSchemaTag << "\n";
  out << "sigma,trials,max_ratio_w2,max_ratio_l1,max_ratio_l2,violations,pass\n";
  out << sigma << ',' << trials << ',' << fmt17(max_ratio_w2) << ',' << fmt17(max_ratio_l1) << ','
      << fmt17(max_ratio_l2) << ',' << violations << ',' << (pass ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace newtonflow
