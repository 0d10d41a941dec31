#ifndef NEWTONFLOW_MEASURE_HPP
#define NEWTONFLOW_MEASURE_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace newtonflow {

struct Atom {
  double position;
  double mass;
};

// Interval carrying uniform density mass/(right-left).
struct Segment {
  double left;
  double right;
  double mass;
  double density() const { return mass / (right - left); }
};

// Probability measure on the line made of finitely many atoms and uniform
// density segments. Construction canonicalizes: pieces are sorted, coincident
// atoms merged, overlapping densities stacked and re-cut into disjoint
// segments, segments split at interior atoms, adjacent segments with equal
// density merged, and total mass renormalized to 1 (rejected if off by more
// than 1e-9). Instances are immutable values.
class Measure1D {
public:
  Measure1D(std::vector<Atom> atoms, std::vector<Segment> segments);

  static Measure1D dirac(double x) { return Measure1D({{x, 1.0}}, {}); }
  static Measure1D uniform(double a, double b) { return Measure1D({}, {{a, b, 1.0}}); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool has_atoms() const { return !atoms_.empty(); }
  bool is_atomic() const { return segments_.empty(); }
  std::size_t piece_count() const { return atoms_.size() + segments_.size(); }

  double total_mass() const;
  double min_support() const;
  double max_support() const;

  nlohmann::json to_json() const;
  static Measure1D from_json(const nlohmann::json& j);
  std::string to_json_string() const { return to_json().dump(); }
  static Measure1D from_json_string(const std::string& s) { return from_json(nlohmann::json::parse(s)); }

private:
  std::vector<Atom> atoms_;      // sorted by position, positions distinct
  std::vector<Segment> segments_;  // sorted, disjoint interiors, no atom inside
};

bool approx_equal(const Measure1D& a, const Measure1D& b, double tol = 1e-12);

}  // namespace newtonflow

#endif
