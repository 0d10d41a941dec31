#include "doctest.h"

#include <cmath>

#include "newtonflow/energy.hpp"
#include "newtonflow/metrics.hpp"
#include "newtonflow/quantile_flow.hpp"
#include "newtonflow/rng.hpp"
#include "newtonflow/scenario.hpp"
#include "newtonflow/subdifferential.hpp"
#include "newtonflow/transforms.hpp"

using namespace newtonflow;

TEST_CASE("frechet minimal subdifferential") {
  SUBCASE("repulsive with an atom is empty") {
    FrechetMinimal r = frechet_minimal(Measure1D::dirac(0.0), -1);
    CHECK(r.empty);
    CHECK(r.witness_atom == 0.0);
    CHECK_THROWS_AS(r(0.0), std::logic_error);
  }
  SUBCASE("repulsive uniform[-1,1] gives k(x) = -x") {
    FrechetMinimal r = frechet_minimal(Measure1D::uniform(-1.0, 1.0), -1);
    REQUIRE(!r.empty);
    for (double x : {-0.9, -0.3, 0.0, 0.4, 0.9}) {
      CHECK(r(x) == doctest::Approx(-x).epsilon(1e-14));
      // oracle: -(integral of sign(x-y)/2 over [-1,1]) by direct midpoint sum
      int n = 20000;
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        double y = -1.0 + 2.0 * (k + 0.5) / n;
        s += (x > y ? 1.0 : x < y ? -1.0 : 0.0) / n;
      }
      CHECK(std::abs(r(x) - (-s)) <= 2e-4);
    }
  }
  SUBCASE("attractive two atoms: symmetric value with sign(0) = 0") {
    Measure1D mu({{-1.0, 0.5}, {1.0, 0.5}}, {});
    FrechetMinimal r = frechet_minimal(mu, 1);
    CHECK(r(-1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    // brute-force pairwise sum oracle
    auto brute = [&](double x) {
      double s = 0.0;
      for (const Atom& a : mu.atoms()) {
        s += a.mass * (x > a.position ? 1.0 : x < a.position ? -1.0 : 0.0);
      }
      return s;
    };
    CHECK(r(-1.0) == doctest::Approx(brute(-1.0)).epsilon(1e-15));
    CHECK(r(1.0) == doctest::Approx(brute(1.0)).epsilon(1e-15));
  }
  SUBCASE("dichotomy on random measures") {
    Rng rng(808);
    for (int i = 0; i < 30; ++i) {
      Measure1D mu = i % 3 == 0   ? random_atomic_measure(rng)
                     : i % 3 == 1 ? random_continuous_measure(rng)
                                  : random_mixed_measure(rng);
      for (int sigma : {1, -1}) {
        FrechetMinimal r = frechet_minimal(mu, sigma);
        CHECK(r.empty == (sigma == -1 && mu.has_atoms()));
      }
    }
  }
}

TEST_CASE("extended minimal plan") {
  SUBCASE("single Dirac: half-density bar over [-1, 1]") {
    TransportPlan plan = extended_minimal_plan(Measure1D::dirac(0.3));
    REQUIRE(plan.vertical.size() == 1);
    CHECK(plan.graph.empty());
    CHECK(plan.vertical[0].x == 0.3);
    CHECK(plan.vertical[0].y_lo == -1.0);
    CHECK(plan.vertical[0].y_hi == 1.0);
    CHECK(plan.vertical[0].density == 0.5);
    CHECK(plan_norm(plan) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("non-atomic measure rides the graph of 2F - 1") {
    TransportPlan plan = extended_minimal_plan(Measure1D::uniform(-2.0, 1.0));
    CHECK(plan.vertical.empty());
    REQUIRE(plan.graph.size() == 1);
    CHECK(plan.graph[0].y_lo == -1.0);
    CHECK(plan.graph[0].y_hi == 1.0);
    CHECK(plan_norm(plan) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
  SUBCASE("quarter/three-quarter atoms split the bar at -1/2") {
    Measure1D mu({{0.0, 0.25}, {1.0, 0.75}}, {});
    TransportPlan plan = extended_minimal_plan(mu);
    REQUIRE(plan.vertical.size() == 2);
    CHECK(plan.vertical[0].y_lo == -1.0);
    CHECK(plan.vertical[0].y_hi == -0.5);
    CHECK(plan.vertical[1].y_lo == -0.5);
    CHECK(plan.vertical[1].y_hi == 1.0);
    CHECK(plan_norm(plan) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(marginal_check(plan, mu));
  }
  SUBCASE("norm pieces directly") {
    TransportPlan bar{{{0.0, -1.0, 1.0, 0.5}}, {}};
    CHECK(plan_norm(bar) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    TransportPlan flat_graph{{}, {{0.0, 1.0, 0.0, 0.0, 1.0}}};
    CHECK(plan_norm(flat_graph) == 0.0);
  }
  SUBCASE("marginal check distinguishes measures") {
    TransportPlan plan = extended_minimal_plan(Measure1D::dirac(0.0));
    CHECK(marginal_check(plan, Measure1D::dirac(0.0)));
    CHECK(!marginal_check(plan, Measure1D::dirac(1.0)));
  }
  SUBCASE("marginal and norm on random mixed measures") {
    Rng rng(909);
    for (int i = 0; i < 30; ++i) {
      Measure1D mu = random_mixed_measure(rng);
      TransportPlan plan = extended_minimal_plan(mu);
      CHECK(plan_norm(plan) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
      CHECK(marginal_check(plan, mu));
      for (const VerticalPiece& v : plan.vertical) {
        CHECK(v.y_lo >= -1.0);
        CHECK(v.y_hi <= 1.0);
      }
      for (const GraphPiece& g : plan.graph) {
        CHECK(g.y_lo >= -1.0);
        CHECK(g.y_hi <= 1.0);
      }
    }
  }
}

TEST_CASE("subdifferential inequality at the quantile level (attractive)") {
  Rng rng(1010);
  for (int i = 0; i < 20; ++i) {
    Measure1D mu = random_atomic_measure(rng);
    Measure1D nu = i % 2 == 0 ? random_atomic_measure(rng) : random_mixed_measure(rng);
    PiecewiseLinear Xm = quantile_of(mu), Xn = quantile_of(nu);
    PiecewiseLinear d = minimal_subdifferential_l2(Xm, 1);
    double lhs = interaction_energy(nu, 1) - interaction_energy(mu, 1);
    double rhs = inner_product01(d, Xn) - inner_product01(d, Xm);
    CHECK(lhs >= rhs - 1e-10);
  }
}

TEST_CASE("repulsive velocity matches 2s - 1 by finite differences") {
  Rng rng(1111);
  for (int i = 0; i < 10; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    double t = 1.0, h = 0.25;
    PiecewiseLinear Xm = quantile_of(repulsive_flow(mu, t - h));
    PiecewiseLinear Xp = quantile_of(repulsive_flow(mu, t + h));
    for (int k = 1; k < 16; ++k) {
      double s = (2.0 * k + 1.0) / 33.0;  // away from dyadic breakpoints
      double fd = (Xp(s) - Xm(s)) / (2.0 * h);
      CHECK(std::abs(fd - (2.0 * s - 1.0)) < 1e-10);
    }
  }
}
