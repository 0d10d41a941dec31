#ifndef NEWTONFLOW_SUBDIFFERENTIAL_HPP
#define NEWTONFLOW_SUBDIFFERENTIAL_HPP

#include <vector>

#include "json.hpp"
#include "newtonflow/measure.hpp"
#include "newtonflow/piecewise_linear.hpp"

namespace newtonflow {

// Minimal Frechet subdifferential of the interaction energy at mu:
// k(x) = sigma * (F(x^-) + F(x) - 1), the symmetric sign average that drops
// the self-interaction term. Empty exactly when sigma = -1 and mu carries an
// atom; EMPTY is a value, not an error.
struct FrechetMinimal {
  bool empty = false;
  double witness_atom = 0.0;  // an atom position proving emptiness
  int sigma = 1;
  PiecewiseLinear cdf;

  double operator()(double x) const;
};

FrechetMinimal frechet_minimal(const Measure1D& mu, int sigma);

// Vertical piece {x} x [y_lo, y_hi] with constant density per unit y-length.
struct VerticalPiece {
  double x;
  double y_lo, y_hi;
  double density;
};

// Graph piece over [x_lo, x_hi]: mass spread uniformly in x along the line
// from (x_lo, y_lo) to (x_hi, y_hi).
struct GraphPiece {
  double x_lo, x_hi;
  double y_lo, y_hi;
  double mass;
};

// Plan on R x R built from 1D pieces; the shape of the minimal extended
// subdifferential element (vertical bars over atoms, a graph over the rest).
struct TransportPlan {
  std::vector<VerticalPiece> vertical;
  std::vector<GraphPiece> graph;

  Measure1D x_marginal() const;
  nlohmann::json to_json() const;
};

// The minimal-norm element of the extended subdifferential at mu0 (repulsive
// sign): each atom of mass m at x_i, covering quantile levels (alpha, beta),
// contributes (1/2) delta_{x_i} (x) chi_{[2 alpha - 1, 2 beta - 1]}; the
// diffuse part rides the graph of k0(x) = 2 F0(x) - 1.
TransportPlan extended_minimal_plan(const Measure1D& mu0);

// Exact integral of y^2 against the plan; equals 1/3 for every minimal plan.
double plan_norm(const TransportPlan& p);

// True iff the x-marginal of p matches mu within 1e-12 in the 1-Wasserstein
// distance.
bool marginal_check(const TransportPlan& p, const Measure1D& mu);

}  // namespace newtonflow

#endif
