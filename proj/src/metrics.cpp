#include "newtonflow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "newtonflow/transforms.hpp"

namespace newtonflow {

namespace {

std::vector<double> merged_grid(const PiecewiseLinear& f, const PiecewiseLinear& g,
                                double lo, double hi) {
  std::vector<double> xs;
  xs.push_back(lo);
  xs.push_back(hi);
  for (double x : f.xs()) {
    if (x > lo && x < hi) xs.push_back(x);
  }
  for (double x : g.xs()) {
    if (x > lo && x < hi) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Walks cells of the merged grid and accumulates a per-cell closed form fed
// with the endpoint limits of both functions.
template <typename CellFn>
double accumulate_cells(const PiecewiseLinear& f, const PiecewiseLinear& g, double lo, double hi,
                        CellFn cell) {
  std::vector<double> xs = merged_grid(f, g, lo, hi);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i], b = xs[i + 1];
    if (!(b > a)) continue;
    total += cell(b - a, f(a), f.left_limit(b), g(a), g.left_limit(b));
  }
  return total;
}

}  // namespace

double l2_distance01(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  double sum = accumulate_cells(f, g, 0.0, 1.0,
                                [](double h, double f0, double f1, double g0, double g1) {
                                  double d0 = f0 - g0, d1 = f1 - g1;
                                  return h * (d0 * d0 + d0 * d1 + d1 * d1) / 3.0;
                                });
  return std::sqrt(std::max(0.0, sum));
}

double inner_product01(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return accumulate_cells(f, g, 0.0, 1.0,
                          [](double h, double f0, double f1, double g0, double g1) {
                            return h * (2.0 * f0 * g0 + f0 * g1 + f1 * g0 + 2.0 * f1 * g1) / 6.0;
                          });
}

double l1_distance_line(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  double lo = std::min(f.min_x(), g.min_x());
  double hi = std::max(f.max_x(), g.max_x());
  if (!(hi > lo)) return 0.0;
  return accumulate_cells(f, g, lo, hi,
                          [](double h, double f0, double f1, double g0, double g1) {
                            double d0 = f0 - g0, d1 = f1 - g1;
                            if (d0 * d1 >= 0.0) return h * (std::abs(d0) + std::abs(d1)) * 0.5;
                            return h * (d0 * d0 + d1 * d1) / (2.0 * std::abs(d0 - d1));
                          });
}

double wasserstein2(const Measure1D& mu, const Measure1D& nu) {
  return l2_distance01(quantile_of(mu), quantile_of(nu));
}

double wasserstein1(const Measure1D& mu, const Measure1D& nu) {
  return l1_distance_line(cdf_of(mu), cdf_of(nu));
}

}  // namespace newtonflow
