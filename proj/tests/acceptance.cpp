// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "newtonflow/energy.hpp"
#include "newtonflow/entropy_solution.hpp"
#include "newtonflow/harness.hpp"
#include "newtonflow/metrics.hpp"
#include "newtonflow/particle_flow.hpp"
#include "newtonflow/quantile_flow.hpp"
#include "newtonflow/rng.hpp"
#include "newtonflow/scenario.hpp"
#include "newtonflow/subdifferential.hpp"
#include "newtonflow/transforms.hpp"
#include "newtonflow/weak_form.hpp"

using namespace newtonflow;

namespace {

struct Criterion {
  int id;
  std::string label;
  double time_limit_s;
  std::function<bool(std::string&)> body;
};

bool expect(bool cond, std::string& why, const std::string& msg) {
  if (!cond && why.empty()) why = msg;
  return cond;
}

// 1. Repulsive Riemann closed form from the Dirac initial datum.
bool criterion1(std::string& why) {
  bool ok = true;
  for (double t : {0.1, 1.0, 10.0}) {
    Measure1D flow = repulsive_flow(Measure1D::dirac(0.0), t);
    EntropySolution sol = EntropySolution::solve(Measure1D::dirac(0.0), -1);
    Measure1D from_entropy = measure_of(sol.cdf_at(t));
    ok &= expect(wasserstein2(flow, from_entropy) < 1e-12, why, "route mismatch");
    for (int i = 0; i < 1000; ++i) {
      double x = -t + 2.0 * t * (i + 0.5) / 1000.0;
      double err = std::abs(sol.evaluate(x, t) - (x + t) / (2.0 * t));
      ok &= expect(err < 1e-12, why, "cdf differs from (x+t)/(2t)");
      if (!ok) break;
    }
  }
  return ok;
}

// 2. Attractive two-atom merge: event, post-merge velocity, energy ramp.
bool criterion2(std::string& why) {
  Measure1D mu({{-1.0, 0.5}, {1.0, 0.5}}, {});
  AttractiveParticleFlow flow(mu);
  bool ok = expect(flow.event_times().size() == 1, why, "expected one collision");
  if (!ok) return false;
  double t_star = flow.event_times()[0];
  ok &= expect(std::abs(t_star - 2.0) <= 1e-13, why, "merge time off");
  ParticleState merged = flow.at(t_star);
  ok &= expect(merged.particles.size() == 1, why, "merge did not coalesce");
  ok &= expect(merged.particles[0].position == 0.0, why, "merge point off");
  ok &= expect(AttractiveParticleFlow::velocities(merged.particles)[0] == 0.0, why,
               "post-merge velocity nonzero");

  EntropySolution sol = EntropySolution::solve(mu, 1);
  ok &= expect(sol.event_times().size() == 1, why, "front collision count");
  ok &= expect(std::abs(sol.event_times()[0] - t_star) <= 1e-13, why, "front merge time");
  FrontSet fs = sol.fronts_at(t_star);
  ok &= expect(fs.fronts.size() == 1 && fs.fronts[0].birth_position == merged.particles[0].position,
               why, "front merge point");

  auto trace = energy_dissipation_trace(mu, 1, {0.0, 0.5, 1.0, 1.5, 2.0, 3.0});
  ok &= expect(std::abs(trace.front().second - 0.5) < 1e-12, why, "W(0) != 1/2");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].first == 2.0) ok &= expect(std::abs(trace[i].second) < 1e-12, why, "W(2) != 0");
    if (i > 0) ok &= expect(trace[i].second <= trace[i - 1].second + 1e-12, why, "energy rose");
  }
  return ok;
}

// 3. Three-way equivalence on seeded random atomic data, both signs.
bool criterion3(std::string& why) {
  Rng rng(33003);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    Measure1D mu = random_atomic_measure(rng, 12);
    for (int sigma : {1, -1}) {
      Scenario sc{mu, sigma, {0.25, 1.0, 4.0}, {}, 1};
      EquivalenceReport rep = check_equivalence(sc);
      ok &= expect(rep.pass, why, "equivalence discrepancy above 1e-10 (case " +
                                      std::to_string(i) + ", sigma " + std::to_string(sigma) + ")");
    }
  }
  return ok;
}

// 4. Particle convergence from the Dirac: exact rate and proof bound.
bool criterion4(std::string& why) {
  std::vector<int> ns;
  for (int n = 2; n <= 1024; n *= 2) ns.push_back(n);
  Scenario sc{Measure1D::dirac(0.0), -1, {1.0}, ns, 1};
  ConvergenceReport rep = convergence_study(sc);
  bool ok = expect(rep.pass, why, "proof bound violated");
  double prev = 0.0;
  for (const ConvergenceRow& row : rep.rows) {
    double reference = row.t / (row.N * std::sqrt(3.0));
    ok &= expect(std::abs(row.dw - reference) <= 1e-12, why, "rate differs from t/(N sqrt 3)");
    if (prev > 0.0) {
      double ratio = row.dw / prev;
      ok &= expect(std::abs(ratio - 0.5) <= 0.025, why, "doubling ratio outside 0.5 +- 5%");
    }
    prev = row.dw;
  }
  return ok;
}

// 5. Contraction suites, 200 seeded pairs per sign.
bool criterion5(std::string& why) {
  for (int sigma : {1, -1}) {
    ContractionReport rep = contraction_suite(55005, sigma, 200);
    if (!expect(rep.pass, why, "contraction violated for sigma " + std::to_string(sigma))) {
      return false;
    }
  }
  return true;
}

// 6. Oleinik bound with the sharp constant on random repulsive runs.
bool criterion6(std::string& why) {
  Rng rng(66006);
  bool ok = true;
  for (int i = 0; i < 50 && ok; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    EntropySolution sol = EntropySolution::solve(mu, -1);
    for (double t : {0.5, 2.0}) {
      OleinikReport rep = oleinik_check(sol, t);
      ok &= expect(rep.max_ratio <= 0.5 + 1e-9, why, "ratio above 1/2");
      if (mu.has_atoms()) {
        ok &= expect(std::abs(rep.max_ratio - 0.5) <= 1e-9, why, "atom did not attain 1/2");
      }
    }
  }
  return ok;
}

// 7. Extended subdifferential plan: universal norm 1/3 and marginals.
bool criterion7(std::string& why) {
  Rng rng(77007);
  bool ok = true;
  for (int i = 0; i < 50 && ok; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    TransportPlan plan = extended_minimal_plan(mu);
    ok &= expect(std::abs(plan_norm(plan) - 1.0 / 3.0) <= 1e-12, why, "plan norm != 1/3");
    ok &= expect(marginal_check(plan, mu), why, "marginal mismatch");
  }
  return ok;
}

// 8. Frechet emptiness dichotomy across measure classes and signs.
bool criterion8(std::string& why) {
  Rng rng(88008);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    Measure1D mu = i % 3 == 0   ? random_atomic_measure(rng)
                   : i % 3 == 1 ? random_continuous_measure(rng)
                                : random_mixed_measure(rng);
    for (int sigma : {1, -1}) {
      FrechetMinimal r = frechet_minimal(mu, sigma);
      bool should_be_empty = (sigma == -1) && mu.has_atoms();
      ok &= expect(r.empty == should_be_empty, why, "dichotomy violated");
    }
  }
  return ok;
}

// 9. Weak-form residual of the Dirac rarefaction under random test functions.
bool criterion9(std::string& why) {
  Rng rng(99009);
  EntropySolution sol = EntropySolution::solve(Measure1D::dirac(0.0), -1);
  bool ok = true;
  for (int i = 0; i < 10 && ok; ++i) {
    double xa = -3.0 + 2.0 * rng.next_real01();
    double xw = 0.5 + 2.5 * rng.next_real01();
    PiecewisePoly space = i % 2 == 0 ? PiecewisePoly::bump(xa, xa + xw)
                                     : PiecewisePoly::tent(xa, xa + 0.5 * xw, xa + xw);
    PiecewisePoly time = [&]() {
      if (i % 3 == 0) {
        double T = 0.5 + 2.0 * rng.next_real01();
        // (1 - t/T)^2: nonzero at t = 0, exercises the initial-data term
        return PiecewisePoly({0.0, T}, {{1.0, -2.0 / T, 1.0 / (T * T)}});
      }
      double ta = 0.05 + rng.next_real01();
      return PiecewisePoly::bump(ta, ta + 0.3 + 1.2 * rng.next_real01());
    }();
    double r = weak_residual(sol, TestFunction(space, time));
    ok &= expect(std::abs(r) < 1e-8, why, "residual " + std::to_string(r) + " at case " +
                                              std::to_string(i));
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "repulsive Riemann closed form (Dirac, t in {0.1, 1, 10})", 0.1, criterion1},
      {2, "attractive two-atom merge at (t, x) = (2, 0) with energy ramp", 0.1, criterion2},
      {3, "three-way equivalence, 100 random atomic data, both signs", 5.0, criterion3},
      {4, "particle convergence rate t/(N sqrt 3) and proof bound", 1.0, criterion4},
      {5, "contraction suites, 200 pairs per sign", 10.0, criterion5},
      {6, "Oleinik sharp constant on 50 repulsive runs", 2.0, criterion6},
      {7, "extended plan norm 1/3 and marginals on 50 measures", 1.0, criterion7},
      {8, "Frechet emptiness dichotomy over 100 cases", 0.5, criterion8},
      {9, "weak residual below 1e-8 for 10 random test functions", 1.0, criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.time_limit_s;
    if (ok && !in_time) why = "time limit exceeded";
    bool pass = ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %d [%s] %s (%.3f s / %.1f s)%s%s\n", c.id, pass ? "PASS" : "FAIL",
                c.label.c_str(), seconds, c.time_limit_s, why.empty() ? "" : " -- ",
                why.c_str());
  }
  if (failures == 0) std::printf("acceptance: all %zu criteria pass\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
