#include "newtonflow/quantile_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "newtonflow/energy.hpp"
#include "newtonflow/particle_flow.hpp"

namespace newtonflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool in_cone(const PiecewiseLinear& x) {
  return (x.kind() == PLKind::quantile || x.kind() == PLKind::cdf) || x.is_non_decreasing();
}

}  // namespace

Measure1D repulsive_flow(const Measure1D& mu0, double t) {
  if (t < 0.0) throw std::invalid_argument("repulsive_flow: t must be non-negative");
  if (t == 0.0) return mu0;
  PiecewiseLinear xt = quantile_of(mu0).plus_linear(2.0 * t, -t, PLKind::quantile);
  return measure_of(xt);
}

PiecewiseLinear minimal_subdifferential_l2(const PiecewiseLinear& x, int sigma) {
  if (!in_cone(x)) {
    throw std::invalid_argument("minimal_subdifferential_l2: x must be non-decreasing");
  }
  if (sigma == -1) {
    return PiecewiseLinear({0.0, 1.0}, {1.0, -1.0}, PLKind::generic);
  }
  if (sigma != 1) throw std::invalid_argument("minimal_subdifferential_l2: sigma must be +-1");

  FlatDecomposition flats = flat_decomposition(x);
  std::vector<double> ss, vs;
  double cursor = 0.0;
  auto push = [&](double s, double v) {
    ss.push_back(s);
    vs.push_back(v);
  };
  for (const FlatInterval& I : flats.intervals) {
    if (I.lo > cursor) {
      push(cursor, 2.0 * cursor - 1.0);
      push(I.lo, 2.0 * I.lo - 1.0);
    }
    double y = I.lo + I.hi - 1.0;
    push(I.lo, y);
    push(I.hi, y);
    cursor = I.hi;
  }
  if (cursor < 1.0) {
    push(cursor, 2.0 * cursor - 1.0);
    push(1.0, 1.0);
  }
  return PiecewiseLinear(std::move(ss), std::move(vs), PLKind::generic);
}

AttractiveQuantileFlow::AttractiveQuantileFlow(const PiecewiseLinear& x0) {
  if (x0.kind() != PLKind::quantile) {
    throw std::invalid_argument("AttractiveQuantileFlow: expects a quantile");
  }
  if (!x0.is_piecewise_constant()) {
    throw std::invalid_argument("AttractiveQuantileFlow: expects piecewise-constant data");
  }
  Epoch epoch;
  epoch.time = 0.0;
  epoch.flats = flat_decomposition(x0).intervals;
  if (epoch.flats.empty() || epoch.flats.front().lo != 0.0 || epoch.flats.back().hi != 1.0) {
    throw std::invalid_argument("AttractiveQuantileFlow: flats must tile [0,1]");
  }

  for (;;) {
    epoch.speeds.clear();
    for (const FlatInterval& I : epoch.flats) epoch.speeds.push_back(1.0 - I.lo - I.hi);
    epochs_.push_back(epoch);
    if (epoch.flats.size() == 1) break;

    // Adjacent flat values always approach: speed gap = (lo+hi) difference.
    double t_min = kInf;
    for (std::size_t j = 0; j + 1 < epoch.flats.size(); ++j) {
      double gap = epoch.flats[j + 1].value - epoch.flats[j].value;
      double closing = epoch.speeds[j] - epoch.speeds[j + 1];
      t_min = std::min(t_min, epoch.time + gap / closing);
    }

    Epoch next;
    next.time = t_min;
    double tol = 1e-13 * std::max(1.0, std::abs(t_min));
    double dt = t_min - epoch.time;
    for (std::size_t j = 0; j < epoch.flats.size(); ++j) {
      FlatInterval I = epoch.flats[j];
      I.value += epoch.speeds[j] * dt;
      if (!next.flats.empty() && I.value - next.flats.back().value <= tol) {
        next.flats.back().hi = I.hi;  // merged interval keeps the left value
        continue;
      }
      next.flats.push_back(I);
    }
    epoch = std::move(next);
  }
}

const AttractiveQuantileFlow::Epoch& AttractiveQuantileFlow::epoch_at(double t) const {
  std::size_t k = epochs_.size() - 1;
  while (k > 0 && epochs_[k].time > t) --k;
  return epochs_[k];
}

PiecewiseLinear AttractiveQuantileFlow::at(double t) const {
  if (t < 0.0) throw std::invalid_argument("AttractiveQuantileFlow: t must be non-negative");
  const Epoch& e = epoch_at(t);
  double dt = t - e.time;
  std::vector<double> ss, vs;
  for (std::size_t j = 0; j < e.flats.size(); ++j) {
    double y = e.flats[j].value + e.speeds[j] * dt;
    ss.push_back(e.flats[j].lo);
    vs.push_back(y);
    ss.push_back(e.flats[j].hi);
    vs.push_back(y);
  }
  return PiecewiseLinear(std::move(ss), std::move(vs), PLKind::quantile);
}

FlatDecomposition AttractiveQuantileFlow::flats_at(double t) const {
  const Epoch& e = epoch_at(t);
  FlatDecomposition out;
  double dt = t - e.time;
  for (std::size_t j = 0; j < e.flats.size(); ++j) {
    out.intervals.push_back({e.flats[j].lo, e.flats[j].hi, e.flats[j].value + e.speeds[j] * dt});
  }
  return out;
}

std::vector<double> AttractiveQuantileFlow::event_times() const {
  std::vector<double> out;
  for (std::size_t k = 1; k < epochs_.size(); ++k) out.push_back(epochs_[k].time);
  return out;
}

nlohmann::json AttractiveQuantileFlow::snapshot_json(double t) const {
  nlohmann::json j;
  j["t"] = t;
  j["flats"] = nlohmann::json::array();
  for (const FlatInterval& I : flats_at(t).intervals) {
    j["flats"].push_back({I.lo, I.hi, I.value});
  }
  return j;
}

PiecewiseLinear l2_flow(const PiecewiseLinear& x0, int sigma, double t) {
  if (t < 0.0) throw std::invalid_argument("l2_flow: t must be non-negative");
  if (!in_cone(x0)) throw std::invalid_argument("l2_flow: x0 must be non-decreasing");
  if (x0.kind() != PLKind::quantile) throw std::invalid_argument("l2_flow: expects a quantile");

  if (sigma == -1) {
    return x0.plus_linear(2.0 * t, -t, PLKind::quantile);
  }
  if (sigma != 1) throw std::invalid_argument("l2_flow: sigma must be +-1");
  if (t == 0.0) return x0;

  if (x0.is_piecewise_constant()) {
    return AttractiveQuantileFlow(x0).at(t);
  }

  FlatDecomposition flats = flat_decomposition(x0);
  if (!flats.intervals.empty()) {
    throw std::invalid_argument(
        "l2_flow: attractive flow with mixed flat/increasing data flattens "
        "continuously; discretize with particles first");
  }
  // Strictly increasing data: X_t = x0 - t(2s-1) while every slope stays
  // non-negative, i.e. up to half the minimal slope.
  double min_slope = kInf;
  const auto& ss = x0.xs();
  const auto& vs = x0.vs();
  for (std::size_t i = 0; i + 1 < ss.size(); ++i) {
    if (ss[i + 1] > ss[i]) {
      min_slope = std::min(min_slope, (vs[i + 1] - vs[i]) / (ss[i + 1] - ss[i]));
    }
  }
  if (t > 0.5 * min_slope * (1.0 + 1e-12)) {
    throw std::invalid_argument(
        "l2_flow: attractive flow past the first flattening time is not "
        "representable exactly; discretize with particles first");
  }
  return x0.plus_linear(-2.0 * t, t, PLKind::quantile);
}

std::vector<std::pair<double, double>> energy_dissipation_trace(
    const Measure1D& mu0, int sigma, const std::vector<double>& times) {
  if (sigma != 1 && sigma != -1) {
    throw std::invalid_argument("energy_dissipation_trace: sigma must be +-1");
  }
  std::vector<double> ts = times;
  for (double t : ts) {
    if (t < 0.0) throw std::invalid_argument("energy_dissipation_trace: times must be non-negative");
  }
  std::vector<std::pair<double, double>> trace;
  if (sigma == 1) {
    AttractiveParticleFlow flow(mu0);
    double t_max = ts.empty() ? 0.0 : *std::max_element(ts.begin(), ts.end());
    for (double te : flow.event_times()) {
      if (te <= t_max) ts.push_back(te);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (double t : ts) {
      trace.emplace_back(t, interaction_energy(flow.at(t).to_measure(), sigma));
    }
  } else {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (double t : ts) {
      trace.emplace_back(t, interaction_energy(repulsive_flow(mu0, t), sigma));
    }
  }
  return trace;
}

}  // namespace newtonflow
