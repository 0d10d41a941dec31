#ifndef NEWTONFLOW_METRICS_HPP
#define NEWTONFLOW_METRICS_HPP

#include "newtonflow/measure.hpp"
#include "newtonflow/piecewise_linear.hpp"

namespace newtonflow {

// 2-Wasserstein distance d_W(mu, nu) = ||X_mu - X_nu||_{L^2(0,1)}, computed
// piecewise-analytically (the squared difference of quantiles is piecewise
// quadratic and integrates in closed form).
double wasserstein2(const Measure1D& mu, const Measure1D& nu);

// 1-Wasserstein distance d_{W,1}(mu, nu) = ||F_mu - F_nu||_{L^1(R)}, exact.
double wasserstein1(const Measure1D& mu, const Measure1D& nu);

// L^2(0,1) distance between two piecewise-linear functions on [0,1].
double l2_distance01(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Exact integral of f*g over [0,1].
double inner_product01(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Exact integral of |f - g| over the union of breakpoint hulls (f and g must
// agree on their constant extensions beyond it).
double l1_distance_line(const PiecewiseLinear& f, const PiecewiseLinear& g);

}  // namespace newtonflow

#endif
