#include "newtonflow/subdifferential.hpp"

#include <cmath>
#include <stdexcept>

#include "newtonflow/metrics.hpp"
#include "newtonflow/transforms.hpp"

namespace newtonflow {

double FrechetMinimal::operator()(double x) const {
  if (empty) throw std::logic_error("FrechetMinimal: evaluation of the empty subdifferential");
  return sigma * (cdf.left_limit(x) + cdf(x) - 1.0);
}

FrechetMinimal frechet_minimal(const Measure1D& mu, int sigma) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("frechet_minimal: sigma must be +-1");
  FrechetMinimal result{false, 0.0, sigma, cdf_of(mu)};
  if (sigma == -1 && mu.has_atoms()) {
    result.empty = true;
    result.witness_atom = mu.atoms().front().position;
  }
  return result;
}

TransportPlan extended_minimal_plan(const Measure1D& mu0) {
  TransportPlan plan;
  PiecewiseLinear F = cdf_of(mu0);
  for (const Atom& a : mu0.atoms()) {
    double alpha = F.left_limit(a.position);
    double beta = F(a.position);
    plan.vertical.push_back({a.position, 2.0 * alpha - 1.0, 2.0 * beta - 1.0, 0.5});
  }
  for (const Segment& s : mu0.segments()) {
    double Fl = F(s.left), Fr = F.left_limit(s.right);
    plan.graph.push_back({s.left, s.right, 2.0 * Fl - 1.0, 2.0 * Fr - 1.0, s.mass});
  }
  return plan;
}

double plan_norm(const TransportPlan& p) {
  double sum = 0.0;
  for (const VerticalPiece& v : p.vertical) {
    sum += v.density * (v.y_hi * v.y_hi * v.y_hi - v.y_lo * v.y_lo * v.y_lo) / 3.0;
  }
  for (const GraphPiece& g : p.graph) {
    // y is uniform on [y_lo, y_hi] along the piece.
    sum += g.mass * (g.y_lo * g.y_lo + g.y_lo * g.y_hi + g.y_hi * g.y_hi) / 3.0;
  }
  return sum;
}

Measure1D TransportPlan::x_marginal() const {
  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  for (const VerticalPiece& v : vertical) {
    atoms.push_back({v.x, v.density * (v.y_hi - v.y_lo)});
  }
  for (const GraphPiece& g : graph) {
    segments.push_back({g.x_lo, g.x_hi, g.mass});
  }
  return Measure1D(std::move(atoms), std::move(segments));
}

nlohmann::json TransportPlan::to_json() const {
  nlohmann::json j;
  j["vertical"] = nlohmann::json::array();
  for (const VerticalPiece& v : vertical) j["vertical"].push_back({v.x, v.y_lo, v.y_hi, v.density});
  j["graph"] = nlohmann::json::array();
  for (const GraphPiece& g : graph) j["graph"].push_back({g.x_lo, g.x_hi, g.y_lo, g.y_hi, g.mass});
  return j;
}

bool marginal_check(const TransportPlan& p, const Measure1D& mu) {
  try {
    return wasserstein1(p.x_marginal(), mu) <= 1e-12;
  } catch (const std::invalid_argument&) {
    return false;  // marginal is not a probability measure
  }
}

}  // namespace newtonflow
