#include "newtonflow/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace newtonflow {

namespace {

constexpr double kDropMass = 1e-15;        // pieces lighter than this are noise
constexpr double kDensityMergeRel = 1e-13;  // relative density tolerance for merging
constexpr double kMassBudget = 1e-9;        // allowed |total-1| before rejection

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

Measure1D::Measure1D(std::vector<Atom> atoms, std::vector<Segment> segments) {
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.position) || !std::isfinite(a.mass)) {
      throw std::invalid_argument("Measure1D: non-finite atom");
    }
    if (a.mass < 0.0) throw std::invalid_argument("Measure1D: negative atom mass");
  }
  for (const Segment& s : segments) {
    if (!std::isfinite(s.left) || !std::isfinite(s.right) || !std::isfinite(s.mass)) {
      throw std::invalid_argument("Measure1D: non-finite segment");
    }
    if (s.mass < 0.0) throw std::invalid_argument("Measure1D: negative segment mass");
    if (s.mass > kDropMass && !(s.right > s.left)) {
      throw std::invalid_argument("Measure1D: segment needs right > left");
    }
  }

  // Atoms: sort, merge coincident positions, drop dust.
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.position < b.position; });
  for (const Atom& a : atoms) {
    if (a.mass <= kDropMass) continue;
    if (!atoms_.empty() && atoms_.back().position == a.position) {
      atoms_.back().mass += a.mass;
    } else {
      atoms_.push_back(a);
    }
  }

  // Segments: sweep the stacked density profile and re-cut at every endpoint
  // and at every atom position, so pieces end up disjoint with no atom in a
  // segment interior.
  std::vector<double> cuts;
  for (const Segment& s : segments) {
    if (s.mass <= kDropMass) continue;
    cuts.push_back(s.left);
    cuts.push_back(s.right);
  }
  if (!cuts.empty()) {
    for (const Atom& a : atoms_) cuts.push_back(a.position);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Segment> cells;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      double lo = cuts[i], hi = cuts[i + 1];
      double rho = 0.0;
      int covering = 0;
      const Segment* only = nullptr;
      for (const Segment& s : segments) {
        if (s.mass <= kDropMass) continue;
        if (s.left <= lo && hi <= s.right) {
          rho += s.density();
          only = &s;
          ++covering;
        }
      }
      if (covering == 0) continue;
      if (covering == 1 && only->left == lo && only->right == hi) {
        // Untouched segment: keep its mass bit-exact rather than taking the
        // round trip through density * width.
        cells.push_back({lo, hi, only->mass});
      } else {
        cells.push_back({lo, hi, rho * (hi - lo)});
      }
    }
    auto has_atom_at = [this](double x) {
      auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                 [](const Atom& a, double v) { return a.position < v; });
      return it != atoms_.end() && it->position == x;
    };
    for (const Segment& c : cells) {
      if (!segments_.empty()) {
        Segment& p = segments_.back();
        bool touching = (p.right == c.left);
        if (touching && !has_atom_at(c.left) && close_rel(p.density(), c.density(), kDensityMergeRel)) {
          p.mass += c.mass;
          p.right = c.right;
          continue;
        }
      }
      segments_.push_back(c);
    }
  }

  if (atoms_.empty() && segments_.empty()) {
    throw std::invalid_argument("Measure1D: empty measure");
  }

  double total = 0.0;
  for (const Atom& a : atoms_) total += a.mass;
  for (const Segment& s : segments_) total += s.mass;
  if (std::abs(total - 1.0) > kMassBudget) {
    throw std::invalid_argument("Measure1D: total mass differs from 1 beyond tolerance");
  }
  if (total != 1.0) {
    for (Atom& a : atoms_) a.mass /= total;
    for (Segment& s : segments_) s.mass /= total;
  }
}

double Measure1D::total_mass() const {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.mass;
  for (const Segment& s : segments_) total += s.mass;
  return total;
}

double Measure1D::min_support() const {
  double m = std::numeric_limits<double>::infinity();
  if (!atoms_.empty()) m = std::min(m, atoms_.front().position);
  if (!segments_.empty()) m = std::min(m, segments_.front().left);
  return m;
}

double Measure1D::max_support() const {
  double m = -std::numeric_limits<double>::infinity();
  if (!atoms_.empty()) m = std::max(m, atoms_.back().position);
  if (!segments_.empty()) m = std::max(m, segments_.back().right);
  return m;
}

nlohmann::json Measure1D::to_json() const {
  nlohmann::json j;
  j["atoms"] = nlohmann::json::array();
  for (const Atom& a : atoms_) j["atoms"].push_back({a.position, a.mass});
  j["segments"] = nlohmann::json::array();
  for (const Segment& s : segments_) j["segments"].push_back({s.left, s.right, s.mass});
  return j;
}

Measure1D Measure1D::from_json(const nlohmann::json& j) {
  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  if (j.contains("atoms")) {
    for (const auto& row : j.at("atoms")) {
      if (!row.is_array() || row.size() != 2) throw std::invalid_argument("Measure1D: atom rows are [x, m]");
      atoms.push_back({row[0].get<double>(), row[1].get<double>()});
    }
  }
  if (j.contains("segments")) {
    for (const auto& row : j.at("segments")) {
      if (!row.is_array() || row.size() != 3) throw std::invalid_argument("Measure1D: segment rows are [a, b, m]");
      segments.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
  }
  return Measure1D(std::move(atoms), std::move(segments));
}

bool approx_equal(const Measure1D& a, const Measure1D& b, double tol) {
  if (a.atoms().size() != b.atoms().size() || a.segments().size() != b.segments().size()) return false;
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    if (std::abs(a.atoms()[i].position - b.atoms()[i].position) > tol) return false;
    if (std::abs(a.atoms()[i].mass - b.atoms()[i].mass) > tol) return false;
  }
  for (std::size_t i = 0; i < a.segments().size(); ++i) {
    if (std::abs(a.segments()[i].left - b.segments()[i].left) > tol) return false;
    if (std::abs(a.segments()[i].right - b.segments()[i].right) > tol) return false;
    if (std::abs(a.segments()[i].mass - b.segments()[i].mass) > tol) return false;
  }
  return true;
}

}  // namespace newtonflow
