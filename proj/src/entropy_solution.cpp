#include "newtonflow/entropy_solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "newtonflow/transforms.hpp"

namespace newtonflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

EntropySolution::EntropySolution(Flux flux, PiecewiseLinear F0,
                                 std::variant<FanBackend, FrontBackend> backend)
    : flux_(flux), F0_(std::move(F0)), backend_(std::move(backend)) {}

EntropySolution EntropySolution::riemann(int sigma, double FL, double FR, double x0) {
  if (!(FL < FR)) throw std::invalid_argument("riemann: needs FL < FR (monotone data)");
  if (FL < 0.0 || FR > 1.0) throw std::invalid_argument("riemann: states must lie in [0,1]");
  PiecewiseLinear F0({x0, x0}, {FL, FR}, PLKind::cdf);
  if (sigma == 1) return attractive(F0);
  if (sigma == -1) return repulsive_fan(F0);
  throw std::invalid_argument("riemann: sigma must be +-1");
}

EntropySolution EntropySolution::attractive(const PiecewiseLinear& F0) {
  Flux flux = Flux::exact(1);
  FrontBackend backend;
  FrontSet fs = wft_init(F0, flux);
  backend.epochs.push_back(fs);
  for (;;) {
    double t_next = next_collision_time(fs);
    if (t_next == kInf) break;
    fs = wft_advance(std::move(fs), t_next);
    backend.epochs.push_back(fs);
  }
  return EntropySolution(flux, F0, std::move(backend));
}

EntropySolution EntropySolution::repulsive_fan(const PiecewiseLinear& F0) {
  if (!F0.is_non_decreasing()) {
    throw std::invalid_argument("repulsive_fan: initial data must be non-decreasing");
  }
  FanBackend backend;
  const auto& xs = F0.xs();
  const auto& vs = F0.vs();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (vs[i + 1] <= vs[i]) continue;  // flat: constant state between pieces
    if (xs[i + 1] == xs[i]) {
      backend.pieces.push_back({true, xs[i], xs[i], vs[i], vs[i + 1], 0.0});
    } else {
      double rho = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]);
      backend.pieces.push_back({false, xs[i], xs[i + 1], vs[i], vs[i + 1], rho});
    }
  }
  if (backend.pieces.empty()) {
    throw std::invalid_argument("repulsive_fan: initial data is constant");
  }
  return EntropySolution(Flux::exact(-1), F0, std::move(backend));
}

EntropySolution EntropySolution::repulsive_wft(const PiecewiseLinear& F0, int N) {
  Flux flux = Flux::discretized(-1, N);
  FrontBackend backend;
  backend.epochs.push_back(wft_init(F0, flux));
  // Fan fronts have strictly increasing speeds left to right; they never
  // collide, so the initial epoch is the whole schedule.
  return EntropySolution(flux, F0, std::move(backend));
}

EntropySolution EntropySolution::solve(const Measure1D& mu0, int sigma) {
  PiecewiseLinear F0 = cdf_of(mu0);
  if (sigma == 1) {
    if (!mu0.is_atomic()) {
      throw std::invalid_argument("solve: attractive front tracking needs atomic data");
    }
    return attractive(F0);
  }
  if (sigma == -1) return repulsive_fan(F0);
  throw std::invalid_argument("solve: sigma must be +-1");
}

bool EntropySolution::is_front_tracking() const {
  return std::holds_alternative<FrontBackend>(backend_);
}

FrontSet EntropySolution::fronts_at(double t) const {
  const auto& backend = std::get<FrontBackend>(backend_);
  std::size_t k = backend.epochs.size() - 1;
  while (k > 0 && backend.epochs[k].time > t) --k;
  FrontSet fs = backend.epochs[k];
  fs.time = t;
  return fs;
}

std::vector<double> EntropySolution::event_times() const {
  std::vector<double> out;
  if (const auto* backend = std::get_if<FrontBackend>(&backend_)) {
    for (std::size_t k = 1; k < backend->epochs.size(); ++k) {
      out.push_back(backend->epochs[k].time);
    }
  }
  return out;
}

double EntropySolution::evaluate(double x, double t) const {
  if (t < 0.0) throw std::invalid_argument("evaluate: t must be non-negative");
  if (t == 0.0) return F0_(x);

  if (const auto* fan = std::get_if<FanBackend>(&backend_)) {
    const auto& ps = fan->pieces;
    // Last piece whose left edge is <= x.
    auto it = std::upper_bound(ps.begin(), ps.end(), x, [t](double xv, const FanPiece& p) {
      return xv < p.left_edge(t);
    });
    if (it == ps.begin()) return ps.front().F_lo;
    const FanPiece& p = *(it - 1);
    if (x >= p.right_edge(t)) return p.F_hi;
    double F = p.F_lo + (x - p.left_edge(t)) * p.slope_at(t);
    return std::clamp(F, p.F_lo, p.F_hi);
  }

  FrontSet fs = fronts_at(t);
  double value = fs.fronts.front().left_state;
  for (const Front& f : fs.fronts) {
    if (f.position_at(t) <= x) value = f.right_state;
  }
  return value;
}

PiecewiseLinear EntropySolution::cdf_at(double t) const {
  if (t < 0.0) throw std::invalid_argument("cdf_at: t must be non-negative");
  if (t == 0.0) return F0_;

  std::vector<double> xs, vs;
  if (const auto* fan = std::get_if<FanBackend>(&backend_)) {
    for (const FanPiece& p : fan->pieces) {
      xs.push_back(p.left_edge(t));
      vs.push_back(p.F_lo);
      xs.push_back(p.right_edge(t));
      vs.push_back(p.F_hi);
    }
  } else {
    FrontSet fs = fronts_at(t);
    for (const Front& f : fs.fronts) {
      double x = f.position_at(t);
      if (!xs.empty() && xs.back() == x) {
        vs.back() = f.right_state;  // coincident fan fronts form one jump
      } else {
        xs.push_back(x);
        vs.push_back(f.left_state);
        xs.push_back(x);
        vs.push_back(f.right_state);
      }
    }
  }
  return PiecewiseLinear(std::move(xs), std::move(vs), PLKind::cdf);
}

std::vector<double> EntropySolution::breakpoints(double t) const {
  std::vector<double> out;
  if (t == 0.0) {
    out = F0_.xs();
  } else if (const auto* fan = std::get_if<FanBackend>(&backend_)) {
    for (const FanPiece& p : fan->pieces) {
      out.push_back(p.left_edge(t));
      out.push_back(p.right_edge(t));
    }
  } else {
    FrontSet fs = fronts_at(t);
    for (const Front& f : fs.fronts) out.push_back(f.position_at(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EntropySolution::TrajectoryArc> EntropySolution::breakpoint_arcs(double t_max) const {
  std::vector<TrajectoryArc> arcs;
  if (const auto* fan = std::get_if<FanBackend>(&backend_)) {
    for (const FanPiece& p : fan->pieces) {
      arcs.push_back({0.0, t_max, p.x_lo, 2.0 * p.F_lo - 1.0});
      arcs.push_back({0.0, t_max, p.x_hi, 2.0 * p.F_hi - 1.0});
    }
    return arcs;
  }
  const auto& epochs = std::get<FrontBackend>(backend_).epochs;
  for (std::size_t k = 0; k < epochs.size(); ++k) {
    double lo = epochs[k].time;
    double hi = (k + 1 < epochs.size()) ? epochs[k + 1].time : t_max;
    lo = std::min(lo, t_max);
    hi = std::min(hi, t_max);
    if (!(hi > lo)) continue;
    for (const Front& f : epochs[k].fronts) {
      arcs.push_back({lo, hi, f.birth_position - f.speed * f.birth_time, f.speed});
    }
  }
  return arcs;
}

OleinikReport oleinik_check(const EntropySolution& sol, double t, const OleinikSampling& sampling) {
  if (!(t > 0.0)) throw std::invalid_argument("oleinik_check: requires t > 0");
  if (sol.sigma() != -1) {
    throw std::invalid_argument("oleinik_check: applies to the repulsive solution");
  }

  std::vector<double> bps = sol.breakpoints(t);
  std::vector<double> xs;
  double span = std::max(1.0, bps.back() - bps.front());
  xs.push_back(bps.front() - 0.5 * span);
  for (std::size_t i = 0; i < bps.size(); ++i) {
    xs.push_back(bps[i]);
    if (i + 1 < bps.size()) {
      for (int k = 1; k <= sampling.per_piece; ++k) {
        double u = static_cast<double>(k) / (sampling.per_piece + 1);
        xs.push_back(bps[i] + u * (bps[i + 1] - bps[i]));
      }
    }
  }
  xs.push_back(bps.back() + 0.5 * span);
  for (double x : sampling.extra_x) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  OleinikReport report;
  auto consider = [&](double x1, double x2) {
    double z = x2 - x1;
    if (!(z > 0.0)) return;
    double ratio = t * (sol.evaluate(x2, t) - sol.evaluate(x1, t)) / z;
    report.max_ratio = std::max(report.max_ratio, ratio);
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) consider(xs[i], xs[i + 1]);
  for (double z : sampling.z_values) {
    for (double x : xs) consider(x, x + z);
  }
  report.pass = report.max_ratio <= 0.5 + 1e-9;
  return report;
}

}  // namespace newtonflow
