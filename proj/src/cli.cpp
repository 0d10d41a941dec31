#include "newtonflow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "newtonflow/energy.hpp"
#include "newtonflow/entropy_solution.hpp"
#include "newtonflow/format.hpp"
#include "newtonflow/harness.hpp"
#include "newtonflow/metrics.hpp"
#include "newtonflow/particle_flow.hpp"
#include "newtonflow/quantile_flow.hpp"
#include "newtonflow/subdifferential.hpp"
#include "newtonflow/transforms.hpp"

namespace newtonflow {

namespace {

using Format = RunConfig::Format;

bool wants_csv(Format f) { return f != Format::json; }
bool wants_json(Format f) { return f != Format::csv; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_file(path, j.dump(2) + "\n");
}

Scenario load_scenario(const RunConfig& config) {
  if (config.scenario_path.empty()) {
    throw std::invalid_argument("this command needs --scenario");
  }
  Scenario sc = Scenario::load(config.scenario_path);
  if (config.sigma_override) sc.sigma = *config.sigma_override;
  if (config.seed_override) sc.seed = *config.seed_override;
  if (!config.times_override.empty()) {
    sc.times = config.times_override;
    std::sort(sc.times.begin(), sc.times.end());
  }
  if (sc.sigma != 1 && sc.sigma != -1) throw std::invalid_argument("sigma must be +-1");
  for (double t : sc.times) {
    if (t < 0.0) throw std::invalid_argument("times must be non-negative");
  }
  return sc;
}

std::pair<double, double> x_range(const RunConfig& config, const Measure1D& mu0, double t_max) {
  if (config.x_min && config.x_max) return {*config.x_min, *config.x_max};
  double lo = mu0.min_support() - t_max - 0.5;
  double hi = mu0.max_support() + t_max + 0.5;
  return {lo, hi};
}

int run_solve(const RunConfig& config) {
  Scenario sc = load_scenario(config);
  if (sc.times.empty()) throw std::invalid_argument("solve needs at least one time");
  double t_max = sc.times.back();
  auto [xlo, xhi] = x_range(config, sc.initial, t_max);

  EntropySolution sol = EntropySolution::solve(sc.initial, sc.sigma);

  std::ostringstream cdf_csv, quant_csv, dens_csv, atoms_csv, fronts_csv, traj_csv;
  cdf_csv << "# " << kSchemaTag << "\nt,x,F\n";
  quant_csv << "# " << kSchemaTag << "\nt,s,X\n";
  dens_csv << "# " << kSchemaTag << "\nt,piece,left,right,density\n";
  atoms_csv << "# " << kSchemaTag << "\nt,index,position,mass\n";
  fronts_csv << "# " << kSchemaTag << "\nt,front_index,position,left_state,right_state,speed\n";
  traj_csv << "# " << kSchemaTag << "\nt,particle_index,position,mass\n";

  nlohmann::json snapshots = nlohmann::json::array();

  // Front trace and particle trajectory rows also at the event times.
  std::vector<double> trace_times = sc.times;
  for (double te : sol.event_times()) {
    if (te <= t_max) trace_times.push_back(te);
  }
  std::sort(trace_times.begin(), trace_times.end());
  trace_times.erase(std::unique(trace_times.begin(), trace_times.end()), trace_times.end());

  for (double t : sc.times) {
    Measure1D mu_t = sc.sigma == 1 ? attractive_particle_flow(sc.initial, t).to_measure()
                                   : repulsive_flow(sc.initial, t);
    for (int i = 0; i < config.nx; ++i) {
      double x = xlo + (xhi - xlo) * i / (config.nx - 1);
      cdf_csv << fmt17(t) << ',' << fmt17(x) << ',' << fmt17(sol.evaluate(x, t)) << "\n";
    }
    PiecewiseLinear X = quantile_of(mu_t);
    for (int i = 0; i < config.ns; ++i) {
      double s = (i + 0.5) / config.ns;
      quant_csv << fmt17(t) << ',' << fmt17(s) << ',' << fmt17(X(s)) << "\n";
    }
    int piece = 0;
    for (const Segment& seg : mu_t.segments()) {
      dens_csv << fmt17(t) << ',' << piece++ << ',' << fmt17(seg.left) << ',' << fmt17(seg.right)
               << ',' << fmt17(seg.density()) << "\n";
    }
    int ai = 0;
    for (const Atom& a : mu_t.atoms()) {
      atoms_csv << fmt17(t) << ',' << ai++ << ',' << fmt17(a.position) << ',' << fmt17(a.mass)
                << "\n";
    }
    nlohmann::json snap;
    snap["t"] = t;
    snap["measure"] = mu_t.to_json();
    snap["energy"] = interaction_energy(mu_t, sc.sigma);
    snapshots.push_back(snap);
  }

  if (sol.is_front_tracking()) {
    for (double t : trace_times) {
      FrontSet fs = sol.fronts_at(t);
      for (std::size_t i = 0; i < fs.fronts.size(); ++i) {
        const Front& f = fs.fronts[i];
        fronts_csv << fmt17(t) << ',' << i << ',' << fmt17(f.position_at(t)) << ','
                   << fmt17(f.left_state) << ',' << fmt17(f.right_state) << ',' << fmt17(f.speed)
                   << "\n";
      }
    }
  }
  if (sc.sigma == 1) {
    AttractiveParticleFlow flow(sc.initial);
    for (double t : trace_times) {
      ParticleState state = flow.at(t);
      for (std::size_t i = 0; i < state.particles.size(); ++i) {
        traj_csv << fmt17(t) << ',' << i << ',' << fmt17(state.particles[i].position) << ','
                 << fmt17(state.particles[i].mass) << "\n";
      }
    }
  }

  std::filesystem::path dir(config.out_dir);
  if (wants_csv(config.format)) {
    write_file(dir / "cdf.csv", cdf_csv.str());
    write_file(dir / "quantile.csv", quant_csv.str());
    write_file(dir / "density.csv", dens_csv.str());
    write_file(dir / "atoms.csv", atoms_csv.str());
    if (sol.is_front_tracking()) write_file(dir / "fronts.csv", fronts_csv.str());
    if (sc.sigma == 1) write_file(dir / "trajectory.csv", traj_csv.str());
  }
  if (wants_json(config.format)) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["scenario"] = sc.to_json();
    j["snapshots"] = snapshots;
    if (sc.sigma == 1) {
      AttractiveQuantileFlow qflow(quantile_of(sc.initial));
      nlohmann::json flats = nlohmann::json::array();
      for (double t : sc.times) flats.push_back(qflow.snapshot_json(t));
      j["quantile_flow"] = flats;
    }
    write_json(dir / "solution.json", j);
  }
  return 0;
}

int run_riemann(const RunConfig& config) {
  int sigma = config.sigma_override.value_or(-1);
  std::vector<double> times = config.times_override;
  if (times.empty()) times.push_back(1.0);
  EntropySolution sol = EntropySolution::riemann(sigma, config.FL, config.FR, config.x0);

  double t_max = *std::max_element(times.begin(), times.end());
  double xlo = config.x_min.value_or(config.x0 - t_max - 0.5);
  double xhi = config.x_max.value_or(config.x0 + t_max + 0.5);

  std::ostringstream csv;
  csv << "# " << kSchemaTag << "\nt,x,F\n";
  for (double t : times) {
    for (int i = 0; i < config.nx; ++i) {
      double x = xlo + (xhi - xlo) * i / (config.nx - 1);
      csv << fmt17(t) << ',' << fmt17(x) << ',' << fmt17(sol.evaluate(x, t)) << "\n";
    }
  }

  std::filesystem::path dir(config.out_dir);
  if (wants_csv(config.format)) write_file(dir / "riemann.csv", csv.str());
  if (wants_json(config.format)) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["sigma"] = sigma;
    j["FL"] = config.FL;
    j["FR"] = config.FR;
    j["x0"] = config.x0;
    if (sigma == 1) {
      j["kind"] = "shock";
      j["speed"] = Flux::exact(1).rh_speed(config.FL, config.FR);
    } else {
      j["kind"] = "rarefaction";
      j["edge_speeds"] = {2.0 * config.FL - 1.0, 2.0 * config.FR - 1.0};
    }
    write_json(dir / "riemann.json", j);
  }
  return 0;
}

int run_equivalence(const RunConfig& config) {
  Scenario sc = load_scenario(config);
  EquivalenceReport report = check_equivalence(sc);
  std::filesystem::path dir(config.out_dir);
  if (wants_csv(config.format)) write_file(dir / "equivalence.csv", report.to_csv());
  if (wants_json(config.format)) write_json(dir / "equivalence.json", report.to_json());
  return report.pass ? 0 : 1;
}

int run_converge(const RunConfig& config) {
  Scenario sc = load_scenario(config);
  if (sc.particle_counts.empty()) sc.particle_counts = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  ConvergenceReport report = convergence_study(sc);
  std::filesystem::path dir(config.out_dir);
  if (wants_csv(config.format)) write_file(dir / "convergence.csv", report.to_csv());
  if (wants_json(config.format)) write_json(dir / "convergence.json", report.to_json());
  return report.pass ? 0 : 1;
}

int run_contract(const RunConfig& config) {
  Scenario sc = load_scenario(config);
  ContractionReport report = contraction_suite(sc.seed, sc.sigma, config.trials);
  std::filesystem::path dir(config.out_dir);
  if (wants_csv(config.format)) write_file(dir / "contraction.csv", report.to_csv());
  if (wants_json(config.format)) write_json(dir / "contraction.json", report.to_json());
  if (!report.pass) {
    std::cerr << "contraction violated; witnesses in report\n";
    return 1;
  }
  return 0;
}

int run_subdiff(const RunConfig& config) {
  Scenario sc = load_scenario(config);
  FrechetMinimal frechet = frechet_minimal(sc.initial, sc.sigma);

  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["sigma"] = sc.sigma;
  j["frechet_empty"] = frechet.empty;
  std::ostringstream csv;
  csv << "# " << kSchemaTag << "\nx,k\n";
  if (frechet.empty) {
    j["witness_atom"] = frechet.witness_atom;
  } else {
    nlohmann::json samples = nlohmann::json::array();
    for (const Atom& a : sc.initial.atoms()) {
      samples.push_back({a.position, frechet(a.position)});
      csv << fmt17(a.position) << ',' << fmt17(frechet(a.position)) << "\n";
    }
    for (const Segment& s : sc.initial.segments()) {
      for (int i = 0; i <= 8; ++i) {
        double x = s.left + (s.right - s.left) * i / 8.0;
        samples.push_back({x, frechet(x)});
        csv << fmt17(x) << ',' << fmt17(frechet(x)) << "\n";
      }
    }
    j["field"] = samples;
  }

  TransportPlan plan = extended_minimal_plan(sc.initial);
  j["extended_plan"] = plan.to_json();
  j["plan_norm"] = plan_norm(plan);
  j["marginal_ok"] = marginal_check(plan, sc.initial);

  std::filesystem::path dir(config.out_dir);
  if (wants_csv(config.format)) write_file(dir / "subdiff.csv", csv.str());
  if (wants_json(config.format)) write_json(dir / "subdiff.json", j);
  return 0;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    std::filesystem::create_directories(config.out_dir);
    switch (config.command) {
      case RunConfig::Command::solve: return run_solve(config);
      case RunConfig::Command::riemann: return run_riemann(config);
      case RunConfig::Command::equivalence: return run_equivalence(config);
      case RunConfig::Command::converge: return run_converge(config);
      case RunConfig::Command::contract: return run_contract(config);
      case RunConfig::Command::subdiff: return run_subdiff(config);
    }
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace newtonflow
