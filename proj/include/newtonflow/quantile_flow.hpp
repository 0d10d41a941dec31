#ifndef NEWTONFLOW_QUANTILE_FLOW_HPP
#define NEWTONFLOW_QUANTILE_FLOW_HPP

#include <utility>
#include <vector>

#include "json.hpp"
#include "newtonflow/measure.hpp"
#include "newtonflow/piecewise_linear.hpp"
#include "newtonflow/transforms.hpp"

namespace newtonflow {

// Closed-form repulsive evolution X_t = X_0 + t(2s-1) pushed back to a
// measure; atoms of mu0 spread into uniform segments of width 2*t*mass, so
// the result is absolutely continuous for every t > 0.
Measure1D repulsive_flow(const Measure1D& mu0, double t);

// Element of minimal L^2 norm of the subdifferential of the (cone-restricted)
// interaction energy at x: the fixed linear field -2s+1 for sigma = -1; for
// sigma = +1 the field 2s-1 off the constancy set and the constant
// alpha_j + beta_j - 1 on each constancy interval. Rejects non-monotone x.
PiecewiseLinear minimal_subdifferential_l2(const PiecewiseLinear& x, int sigma);

// L^2 gradient flow of the quantile under the minimal selection.
//   sigma = -1: exact translation x0 + t(2s-1) in one step, any monotone x0.
//   sigma = +1: event-driven evolution of the constancy intervals for
//     piecewise-constant x0 (flat values translate at 1 - alpha - beta and
//     merge when they meet); strictly increasing x0 is supported up to the
//     first flattening time; mixed data requires particle discretization
//     upstream and is rejected.
PiecewiseLinear l2_flow(const PiecewiseLinear& x0, int sigma, double t);

// Attractive quantile dynamics for piecewise-constant data, kept as a full
// event schedule of the evolving flat decomposition.
class AttractiveQuantileFlow {
public:
  explicit AttractiveQuantileFlow(const PiecewiseLinear& x0);

  PiecewiseLinear at(double t) const;
  FlatDecomposition flats_at(double t) const;
  std::vector<double> event_times() const;
  nlohmann::json snapshot_json(double t) const;

private:
  struct Epoch {
    double time;
    std::vector<FlatInterval> flats;  // tile [0,1]
    std::vector<double> speeds;       // 1 - lo - hi per flat
  };
  std::vector<Epoch> epochs_;
  const Epoch& epoch_at(double t) const;
};

// (t, W) samples of the interaction energy along the flow started at mu0,
// evaluated at the requested times plus, for sigma = +1, every collision
// event inside the sampled window.
std::vector<std::pair<double, double>> energy_dissipation_trace(
    const Measure1D& mu0, int sigma, const std::vector<double>& times);

}  // namespace newtonflow

#endif
