#include "newtonflow/weak_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "newtonflow/quadrature.hpp"

namespace newtonflow {

PiecewisePoly::PiecewisePoly(std::vector<double> knots, std::vector<std::vector<double>> cells)
    : knots_(std::move(knots)), cells_(std::move(cells)) {
  if (knots_.size() < 2 || cells_.size() + 1 != knots_.size()) {
    throw std::invalid_argument("PiecewisePoly: need n knots and n-1 coefficient rows");
  }
  for (double k : knots_) {
    if (!std::isfinite(k)) throw std::invalid_argument("PiecewisePoly: support must be compact");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1])) {
      throw std::invalid_argument("PiecewisePoly: knots must be strictly increasing");
    }
  }
}

double PiecewisePoly::operator()(double x) const {
  if (x <= knots_.front() || x >= knots_.back()) {
    // At the hull boundary the cell polynomial is used only from the inside;
    // outside the support the function vanishes.
    if (x == knots_.front()) {
      const auto& c = cells_.front();
      return c.empty() ? 0.0 : c.front();
    }
    return 0.0;
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  std::size_t cell = static_cast<std::size_t>(it - knots_.begin()) - 1;
  double u = x - knots_[cell];
  const auto& c = cells_[cell];
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * u + c[k];
  return v;
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<std::vector<double>> dcells;
  dcells.reserve(cells_.size());
  for (const auto& c : cells_) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(k * c[k]);
    if (d.empty()) d.push_back(0.0);
    dcells.push_back(std::move(d));
  }
  return PiecewisePoly(knots_, std::move(dcells));
}

int PiecewisePoly::max_degree() const {
  std::size_t deg = 0;
  for (const auto& c : cells_) deg = std::max(deg, c.empty() ? 0 : c.size() - 1);
  return static_cast<int>(deg);
}

PiecewisePoly PiecewisePoly::tent(double lo, double mid, double hi, double height) {
  return PiecewisePoly({lo, mid, hi},
                       {{0.0, height / (mid - lo)}, {height, -height / (hi - mid)}});
}

PiecewisePoly PiecewisePoly::bump(double lo, double hi) {
  double w = hi - lo;
  double scale = 16.0 / (w * w * w * w);
  return PiecewisePoly({lo, hi}, {{0.0, 0.0, scale * w * w, -2.0 * scale * w, scale}});
}

TestFunction::TestFunction(PiecewisePoly space_part, PiecewisePoly time_part)
    : space(std::move(space_part)),
      time(std::move(time_part)),
      space_dx(space.derivative()),
      time_dt(time.derivative()) {}

namespace {

std::vector<double> merged_x_grid(const std::vector<double>& solution_bps,
                                  const std::vector<double>& knots) {
  std::vector<double> xs(knots.begin(), knots.end());
  for (double b : solution_bps) {
    if (b > knots.front() && b < knots.back()) xs.push_back(b);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

double weak_residual(const EntropySolution& sol, const TestFunction& phi) {
  const auto& xknots = phi.space.knots();
  const auto& tknots = phi.time.knots();
  const int nx = phi.space.max_degree() / 2 + 3;
  const int nt = 24;
  const Flux flux = Flux::exact(sol.sigma());

  // Initial-time term.
  double residual = 0.0;
  double time0 = phi.time(0.0);
  if (time0 != 0.0) {
    const PiecewiseLinear& F0 = sol.initial_cdf();
    std::vector<double> xs = merged_x_grid(F0.xs(), xknots);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      residual += time0 * integrate(
                              [&](double x) { return F0(x) * phi.space(x); },
                              xs[i], xs[i + 1], nx);
    }
  }

  double T = tknots.back();
  if (T <= 0.0) return residual;

  // Panel boundaries: test-function knots, shock collisions, and the times a
  // solution breakpoint crosses a space knot.
  std::vector<double> panels = {0.0, T};
  for (double tk : tknots) {
    if (tk > 0.0 && tk < T) panels.push_back(tk);
  }
  for (double te : sol.event_times()) {
    if (te > 0.0 && te < T) panels.push_back(te);
  }
  for (const auto& arc : sol.breakpoint_arcs(T)) {
    if (arc.vel == 0.0) continue;
    for (double c : xknots) {
      double tc = (c - arc.pos0) / arc.vel;
      if (tc > arc.t_lo && tc < arc.t_hi && tc > 0.0 && tc < T) panels.push_back(tc);
    }
  }
  std::sort(panels.begin(), panels.end());
  panels.erase(std::unique(panels.begin(), panels.end()), panels.end());

  auto space_integrals = [&](double t) {
    std::vector<double> xs = merged_x_grid(sol.breakpoints(t), xknots);
    double value = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      value += integrate(
          [&](double x) {
            double F = sol.evaluate(x, t);
            return F * phi.dt(x, t) + flux.g(F) * phi.dx(x, t);
          },
          xs[i], xs[i + 1], nx);
    }
    return value;
  };

  for (std::size_t i = 0; i + 1 < panels.size(); ++i) {
    if (!(panels[i + 1] > panels[i])) continue;
    residual += integrate(space_integrals, panels[i], panels[i + 1], nt);
  }
  return residual;
}

}  // namespace newtonflow
