#include "doctest.h"

#include <cmath>

#include "newtonflow/measure.hpp"
#include "newtonflow/rng.hpp"
#include "newtonflow/scenario.hpp"
#include "newtonflow/transforms.hpp"

using namespace newtonflow;

TEST_CASE("cdf of a single atom") {
  PiecewiseLinear F = cdf_of(Measure1D::dirac(0.0));
  CHECK(F(-0.1) == 0.0);
  CHECK(F(0.0) == 1.0);  // right-continuous
  CHECK(F.left_limit(0.0) == 0.0);
  CHECK(F(0.1) == 1.0);
}

TEST_CASE("cdf of two symmetric atoms") {
  Measure1D mu({{-1.0, 0.5}, {1.0, 0.5}}, {});
  PiecewiseLinear F = cdf_of(mu);
  CHECK(F(-2.0) == 0.0);
  CHECK(F(-1.0) == 0.5);
  CHECK(F(0.0) == 0.5);
  CHECK(F(1.0) == 1.0);
}

TEST_CASE("cdf of uniform[-t,t] is (x+t)/(2t)") {
  double t = 0.7;
  PiecewiseLinear F = cdf_of(Measure1D::uniform(-t, t));
  for (double x : {-0.69, -0.3, 0.0, 0.2, 0.69}) {
    CHECK(F(x) == doctest::Approx((x + t) / (2 * t)).epsilon(1e-15));
  }
}

TEST_CASE("quantile of atoms is the step function of partial sums") {
  Measure1D mu({{-1.0, 0.25}, {2.0, 0.75}}, {});
  PiecewiseLinear X = quantile_of(mu);
  CHECK(X(0.1) == -1.0);
  CHECK(X(0.24) == -1.0);
  CHECK(X(0.25) == 2.0);  // right-continuous at the jump
  CHECK(X(0.9) == 2.0);
  CHECK(X.left_limit(0.25) == -1.0);
}

TEST_CASE("quantile of uniform[a,b] is linear") {
  PiecewiseLinear X = quantile_of(Measure1D::uniform(2.0, 5.0));
  CHECK(X(0.0) == 2.0);
  CHECK(X(0.5) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(X(1.0) == 5.0);
}

TEST_CASE("measure_of inverts the representations") {
  SUBCASE("constant quantile gives a Dirac") {
    PiecewiseLinear X({0.0, 1.0}, {0.0, 0.0}, PLKind::quantile);
    Measure1D mu = measure_of(X);
    CHECK(mu.is_atomic());
    CHECK(mu.atoms()[0].position == 0.0);
    CHECK(mu.atoms()[0].mass == 1.0);
  }
  SUBCASE("X(s) = t(2s-1) gives uniform[-t,t]") {
    double t = 1.3;
    PiecewiseLinear X({0.0, 1.0}, {-t, t}, PLKind::quantile);
    Measure1D mu = measure_of(X);
    REQUIRE(mu.segments().size() == 1);
    CHECK(mu.segments()[0].left == -t);
    CHECK(mu.segments()[0].right == t);
    CHECK(mu.segments()[0].density() == doctest::Approx(1.0 / (2 * t)).epsilon(1e-15));
  }
  SUBCASE("cdf with a jump and a ramp") {
    PiecewiseLinear F({0.0, 0.0, 1.0, 3.0}, {0.0, 0.5, 0.5, 1.0}, PLKind::cdf);
    Measure1D mu = measure_of(F);
    REQUIRE(mu.atoms().size() == 1);
    REQUIRE(mu.segments().size() == 1);
    CHECK(mu.atoms()[0].position == 0.0);
    CHECK(mu.atoms()[0].mass == 0.5);
    CHECK(mu.segments()[0].left == 1.0);
    CHECK(mu.segments()[0].right == 3.0);
    CHECK(mu.segments()[0].mass == 0.5);
  }
  SUBCASE("cdf with wrong limits is rejected") {
    PiecewiseLinear F({0.0, 0.0}, {0.2, 0.8}, PLKind::cdf);
    CHECK_THROWS_AS(measure_of(F), std::invalid_argument);
  }
}

TEST_CASE("round-trips hold on random mixed measures") {
  Rng rng(20240811);
  for (int i = 0; i < 50; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    CHECK(approx_equal(measure_of(cdf_of(mu)), mu, 1e-12));
    CHECK(approx_equal(measure_of(quantile_of(mu)), mu, 1e-12));
  }
  // Dyadic atomic data round-trips without any float drift.
  for (int i = 0; i < 20; ++i) {
    Measure1D mu = random_atomic_measure(rng);
    CHECK(approx_equal(measure_of(cdf_of(mu)), mu, 0.0));
    CHECK(approx_equal(measure_of(quantile_of(mu)), mu, 0.0));
  }
}

TEST_CASE("generalized-inverse pairing F(X(s)) >= s, F(X(s)-eps) <= s") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Measure1D mu = random_mixed_measure(rng);
    PiecewiseLinear F = cdf_of(mu);
    PiecewiseLinear X = quantile_of(mu);
    for (int k = 0; k < 40; ++k) {
      double s = rng.next_real01();
      if (s <= 0.0 || s >= 1.0) continue;
      double x = X(s);
      CHECK(F(x) >= s - 1e-12);
      CHECK(F.left_limit(x) <= s + 1e-12);
    }
  }
}

TEST_CASE("flat decomposition") {
  SUBCASE("constant quantile covers (0,1)") {
    PiecewiseLinear X({0.0, 1.0}, {3.0, 3.0}, PLKind::quantile);
    FlatDecomposition d = flat_decomposition(X);
    REQUIRE(d.intervals.size() == 1);
    CHECK(d.intervals[0].lo == 0.0);
    CHECK(d.intervals[0].hi == 1.0);
  }
  SUBCASE("strictly increasing quantile has none") {
    PiecewiseLinear X({0.0, 1.0}, {0.0, 1.0}, PLKind::quantile);
    CHECK(flat_decomposition(X).intervals.empty());
  }
  SUBCASE("quantile of (1/4) delta_0 + (3/4) delta_1") {
    Measure1D mu({{0.0, 0.25}, {1.0, 0.75}}, {});
    FlatDecomposition d = flat_decomposition(quantile_of(mu));
    REQUIRE(d.intervals.size() == 2);
    CHECK(d.intervals[0].lo == 0.0);
    CHECK(d.intervals[0].hi == 0.25);
    CHECK(d.intervals[1].lo == 0.25);
    CHECK(d.intervals[1].hi == 1.0);
  }
}
