#include "doctest.h"

#include <stdexcept>

#include "newtonflow/measure.hpp"

using namespace newtonflow;

TEST_CASE("construction sorts and merges coincident atoms") {
  Measure1D mu({{1.0, 0.25}, {-1.0, 0.25}, {1.0, 0.5}}, {});
  REQUIRE(mu.atoms().size() == 2);
  CHECK(mu.atoms()[0].position == -1.0);
  CHECK(mu.atoms()[0].mass == 0.25);
  CHECK(mu.atoms()[1].position == 1.0);
  CHECK(mu.atoms()[1].mass == 0.75);
  CHECK(mu.total_mass() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("overlapping segments are stacked and re-cut") {
  // [0,2] + [1,3] at mass 1/2 each: densities 1/4, 1/2, 1/4.
  Measure1D mu({}, {{0.0, 2.0, 0.5}, {1.0, 3.0, 0.5}});
  REQUIRE(mu.segments().size() == 3);
  CHECK(mu.segments()[0].density() == doctest::Approx(0.25));
  CHECK(mu.segments()[1].density() == doctest::Approx(0.5));
  CHECK(mu.segments()[2].density() == doctest::Approx(0.25));
  CHECK(mu.segments()[1].left == 1.0);
  CHECK(mu.segments()[1].right == 2.0);
}

TEST_CASE("an atom splits the segment containing it") {
  Measure1D mu({{0.0, 0.5}}, {{-1.0, 1.0, 0.5}});
  REQUIRE(mu.segments().size() == 2);
  CHECK(mu.segments()[0].right == 0.0);
  CHECK(mu.segments()[1].left == 0.0);
  REQUIRE(mu.atoms().size() == 1);
}

TEST_CASE("adjacent equal-density segments merge") {
  Measure1D mu({}, {{0.0, 1.0, 0.5}, {1.0, 2.0, 0.5}});
  REQUIRE(mu.segments().size() == 1);
  CHECK(mu.segments()[0].left == 0.0);
  CHECK(mu.segments()[0].right == 2.0);
}

TEST_CASE("mass budget is enforced and small drift renormalized") {
  CHECK_THROWS_AS(Measure1D({{0.0, 0.5}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Measure1D({{0.0, -0.2}, {1.0, 1.2}}, {}), std::invalid_argument);
  Measure1D mu({{0.0, 1.0 + 5e-10}}, {});
  CHECK(mu.atoms()[0].mass == 1.0);
}

TEST_CASE("degenerate segment is rejected") {
  CHECK_THROWS_AS(Measure1D({}, {{1.0, 1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("json round-trip") {
  Measure1D mu({{0.0, 0.5}}, {{1.0, 3.0, 0.5}});
  Measure1D back = Measure1D::from_json_string(mu.to_json_string());
  CHECK(approx_equal(mu, back, 0.0));
}
