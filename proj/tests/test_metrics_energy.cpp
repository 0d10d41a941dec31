#include "doctest.h"

#include <cmath>

#include "newtonflow/energy.hpp"
#include "newtonflow/metrics.hpp"
#include "newtonflow/rng.hpp"
#include "newtonflow/scenario.hpp"
#include "newtonflow/transforms.hpp"

using namespace newtonflow;

TEST_CASE("wasserstein2 on reference pairs") {
  Measure1D dirac = Measure1D::dirac(0.0);
  CHECK(wasserstein2(dirac, dirac) == 0.0);
  // integral of (2s-1)^2 over (0,1) is 1/3, by the closed-form antiderivative
  // (2s-1)^3/6.
  CHECK(wasserstein2(dirac, Measure1D::uniform(-1.0, 1.0)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(wasserstein2(Measure1D::dirac(-2.0), Measure1D::dirac(1.5)) ==
        doctest::Approx(3.5).epsilon(1e-15));
}

TEST_CASE("wasserstein1 on reference pairs") {
  Measure1D mu({{0.0, 1.0}}, {});
  CHECK(wasserstein1(mu, mu) == 0.0);
  CHECK(wasserstein1(Measure1D::dirac(0.0), Measure1D::dirac(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("metric axioms and w1 <= w2 on random triples") {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    Measure1D a = random_mixed_measure(rng);
    Measure1D b = random_mixed_measure(rng);
    Measure1D c = random_mixed_measure(rng);
    double ab = wasserstein2(a, b), ba = wasserstein2(b, a);
    CHECK(ab == ba);
    CHECK(ab <= wasserstein2(a, c) + wasserstein2(c, b) + 1e-12);
    CHECK(wasserstein1(a, b) <= ab + 1e-12);
  }
}

namespace {

// Brute-force pairwise sum over atoms, the oracle for atomic energies.
double atomic_double_sum(const Measure1D& mu, int sigma) {
  double sum = 0.0;
  for (const Atom& a : mu.atoms()) {
    for (const Atom& b : mu.atoms()) {
      sum += a.mass * b.mass * sigma * std::abs(a.position - b.position);
    }
  }
  return 0.5 * sum;
}

}  // namespace

TEST_CASE("interaction energy reference values") {
  CHECK(interaction_energy(Measure1D::dirac(0.0), 1) == 0.0);

  Measure1D pair({{-1.0, 0.5}, {1.0, 0.5}}, {});
  CHECK(interaction_energy(pair, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(interaction_energy(pair, 1) == doctest::Approx(atomic_double_sum(pair, 1)).epsilon(1e-14));

  // Uniform on [0,1], repulsive: -1/6; oracle below is a 2D midpoint
  // quadrature of (1/2) iint -|x-y| over the unit square.
  Measure1D unif = Measure1D::uniform(0.0, 1.0);
  CHECK(interaction_energy(unif, -1) == doctest::Approx(-1.0 / 6.0).epsilon(1e-13));
  int n = 600;
  double quad = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      quad += -std::abs((i + 0.5) / n - (j + 0.5) / n);
    }
  }
  quad *= 0.5 / (static_cast<double>(n) * n);
  CHECK(interaction_energy(unif, -1) == doctest::Approx(quad).epsilon(5e-6));
}

TEST_CASE("linear form matches the double sum on random measures") {
  Rng rng(777);
  for (int i = 0; i < 60; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    for (int sigma : {1, -1}) {
      EnergyParts parts = interaction_energy_parts(mu, sigma);
      CHECK(std::abs(parts.linear_form - parts.double_sum) <= 1e-10);
    }
  }
}

TEST_CASE("change of variables: integral against mu equals integral of xi(X(s))") {
  Rng rng(4242);
  auto by_pieces = [](const Measure1D& mu, int which) {
    // Closed forms per piece: xi = x, x^2, sin(x).
    double sum = 0.0;
    for (const Atom& a : mu.atoms()) {
      double v = which == 0 ? a.position : which == 1 ? a.position * a.position : std::sin(a.position);
      sum += a.mass * v;
    }
    for (const Segment& s : mu.segments()) {
      double rho = s.density();
      if (which == 0) {
        sum += rho * 0.5 * (s.right * s.right - s.left * s.left);
      } else if (which == 1) {
        sum += rho * (s.right * s.right * s.right - s.left * s.left * s.left) / 3.0;
      } else {
        sum += rho * (std::cos(s.left) - std::cos(s.right));
      }
    }
    return sum;
  };
  for (int i = 0; i < 20; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    PiecewiseLinear X = quantile_of(mu);
    // Quadrature of xi(X(s)) over s: 5-point Gauss per quantile piece.
    const double gn[5] = {0.0, 0.5384693101056831, -0.5384693101056831,
                          0.9061798459386640, -0.9061798459386640};
    const double gw[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                          0.2369268850561891, 0.2369268850561891};
    for (int which : {0, 1, 2}) {
      double quad = 0.0;
      const auto& ss = X.xs();
      const auto& vs = X.vs();
      for (std::size_t p = 0; p + 1 < ss.size(); ++p) {
        double h = ss[p + 1] - ss[p];
        if (!(h > 0.0)) continue;
        for (int k = 0; k < 5; ++k) {
          double u = 0.5 * (1.0 + gn[k]);  // position within the piece
          double x = vs[p] + (vs[p + 1] - vs[p]) * u;
          double v = which == 0 ? x : which == 1 ? x * x : std::sin(x);
          quad += 0.5 * gw[k] * v * h;
        }
      }
      CHECK(std::abs(by_pieces(mu, which) - quad) <= 1e-8);
    }
  }
}
