#include "newtonflow/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "newtonflow/transforms.hpp"

namespace newtonflow {

namespace {

// Mean of |x0 - y| for y uniform on [a, b].
double mean_abs_to_point(double x0, double a, double b) {
  if (x0 <= a) return 0.5 * (a + b) - x0;
  if (x0 >= b) return x0 - 0.5 * (a + b);
  return ((x0 - a) * (x0 - a) + (b - x0) * (b - x0)) / (2.0 * (b - a));
}

// Integral over [a, b] x [c, d] of |x - y| (unit densities); the inner
// integral is piecewise quadratic in x, so Simpson per sub-cell is exact.
double box_integral(double a, double b, double c, double d) {
  auto inner = [c, d](double x) {
    if (x <= c) return (0.5 * (c + d) - x) * (d - c);
    if (x >= d) return (x - 0.5 * (c + d)) * (d - c);
    return 0.5 * ((x - c) * (x - c) + (d - x) * (d - x));
  };
  std::vector<double> cuts = {a, b};
  if (c > a && c < b) cuts.push_back(c);
  if (d > a && d < b) cuts.push_back(d);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    total += (hi - lo) / 6.0 * (inner(lo) + 4.0 * inner(0.5 * (lo + hi)) + inner(hi));
  }
  return total;
}

double pairwise_double_sum(const Measure1D& mu) {
  struct P {
    bool atom;
    double lo, hi, mass;
  };
  std::vector<P> ps;
  for (const Atom& a : mu.atoms()) ps.push_back({true, a.position, a.position, a.mass});
  for (const Segment& s : mu.segments()) ps.push_back({false, s.left, s.right, s.mass});

  double sum = 0.0;  // full ordered double integral of |x-y|
  for (const P& p : ps) {
    for (const P& q : ps) {
      if (p.atom && q.atom) {
        sum += p.mass * q.mass * std::abs(p.lo - q.lo);
      } else if (p.atom) {
        sum += p.mass * q.mass * mean_abs_to_point(p.lo, q.lo, q.hi);
      } else if (q.atom) {
        sum += p.mass * q.mass * mean_abs_to_point(q.lo, p.lo, p.hi);
      } else {
        double rho_p = p.mass / (p.hi - p.lo);
        double rho_q = q.mass / (q.hi - q.lo);
        sum += rho_p * rho_q * box_integral(p.lo, p.hi, q.lo, q.hi);
      }
    }
  }
  return 0.5 * sum;
}

}  // namespace

EnergyParts interaction_energy_parts(const Measure1D& mu, int sigma) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("interaction energy: sigma must be +-1");
  PiecewiseLinear x = quantile_of(mu);
  const auto& ss = x.xs();
  const auto& vs = x.vs();
  double lin = 0.0;
  for (std::size_t i = 0; i + 1 < ss.size(); ++i) {
    double h = ss[i + 1] - ss[i];
    if (!(h > 0.0)) continue;
    double v0 = vs[i], dv = vs[i + 1] - vs[i];
    double c0 = 2.0 * ss[i] - 1.0;
    lin += h * (c0 * v0 + 0.5 * (c0 * dv + 2.0 * h * v0) + 2.0 * h * dv / 3.0);
  }
  return {sigma * lin, sigma * pairwise_double_sum(mu)};
}

double interaction_energy(const Measure1D& mu, int sigma) {
  EnergyParts parts = interaction_energy_parts(mu, sigma);
  if (std::abs(parts.linear_form - parts.double_sum) > 1e-10) {
    throw std::logic_error("interaction energy: linear form and double sum disagree");
  }
  return parts.linear_form;
}

}  // namespace newtonflow
