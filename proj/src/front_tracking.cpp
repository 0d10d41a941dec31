#include "newtonflow/front_tracking.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace newtonflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pair_collision_time(const Front& a, const Front& b) {
  if (a.speed <= b.speed) return kInf;
  double num = (b.birth_position - b.speed * b.birth_time) -
               (a.birth_position - a.speed * a.birth_time);
  return num / (a.speed - b.speed);
}

Front merged_front(const Front& left, const Front& right, double t, const Flux& flux) {
  Front m;
  m.birth_time = t;
  m.birth_position = left.position_at(t);
  m.left_state = left.left_state;
  m.right_state = right.right_state;
  m.speed = flux.rh_speed(m.left_state, m.right_state);
  return m;
}

}  // namespace

void FrontSet::validate() const {
  for (std::size_t i = 0; i < fronts.size(); ++i) {
    const Front& f = fronts[i];
    if (!(f.right_state > f.left_state)) {
      throw std::logic_error("FrontSet: fronts must jump upward");
    }
    double lhs = f.speed * (f.left_state - f.right_state);
    double rhs = flux(f.left_state) - flux(f.right_state);
    if (std::abs(lhs - rhs) > 1e-12) {
      throw std::logic_error("FrontSet: Rankine-Hugoniot violation");
    }
    if (i + 1 < fronts.size()) {
      if (fronts[i].right_state != fronts[i + 1].left_state) {
        throw std::logic_error("FrontSet: states must chain");
      }
      double xi = fronts[i].position_at(time);
      double xj = fronts[i + 1].position_at(time);
      // Coincident positions are allowed only for a diverging pair (a jump
      // freshly split into fan fronts that have not separated yet).
      if (xi > xj || (xi == xj && fronts[i].speed >= fronts[i + 1].speed)) {
        throw std::logic_error("FrontSet: front positions must stay ordered");
      }
    }
  }
}

FrontSet wft_init(const PiecewiseLinear& F0, const Flux& flux) {
  if (!F0.is_piecewise_constant()) {
    throw std::invalid_argument("wft_init: initial data must be piecewise constant");
  }
  if (!flux.is_discretized() && flux.sigma == -1) {
    throw std::invalid_argument("wft_init: repulsive exact flux produces rarefactions, use the fan solver");
  }
  if (flux.is_discretized() && flux.sigma == 1) {
    throw std::invalid_argument("wft_init: discretized flux is the repulsive approximation path");
  }

  FrontSet fs;
  fs.time = 0.0;
  fs.flux = flux;
  const auto& xs = F0.xs();
  const auto& vs = F0.vs();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] != xs[i] || vs[i + 1] <= vs[i]) continue;  // not an upward jump
    double x = xs[i], lo = vs[i], hi = vs[i + 1];
    if (!flux.is_discretized()) {
      fs.fronts.push_back({0.0, x, flux.rh_speed(lo, hi), lo, hi});
      continue;
    }
    int N = flux.level.value();
    double jlo = lo * N, jhi = hi * N;
    int clo = static_cast<int>(std::llround(jlo));
    int chi = static_cast<int>(std::llround(jhi));
    if (std::abs(jlo - clo) > 1e-9 || std::abs(jhi - chi) > 1e-9) {
      throw std::invalid_argument("wft_init: jump states must lie on the flux grid j/N");
    }
    for (int j = clo + 1; j <= chi; ++j) {
      fs.fronts.push_back({0.0, x, flux.cell_slope(j),
                           static_cast<double>(j - 1) / N, static_cast<double>(j) / N});
    }
  }
  if (fs.fronts.empty()) {
    throw std::invalid_argument("wft_init: initial data carries no jump");
  }
  return fs;
}

double next_collision_time(const FrontSet& fs) {
  double t_min = kInf;
  for (std::size_t i = 0; i + 1 < fs.fronts.size(); ++i) {
    double t = pair_collision_time(fs.fronts[i], fs.fronts[i + 1]);
    if (t < fs.time) t = fs.time;
    t_min = std::min(t_min, t);
  }
  return t_min;
}

FrontSet merge_adjacent(FrontSet fs, std::size_t i, double t) {
  if (i + 1 >= fs.fronts.size()) throw std::invalid_argument("merge_adjacent: index out of range");
  Front m = merged_front(fs.fronts[i], fs.fronts[i + 1], t, fs.flux);
  fs.fronts[i] = m;
  fs.fronts.erase(fs.fronts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  fs.time = t;
  return fs;
}

FrontSet wft_advance(FrontSet fs, double t_target) {
  if (t_target < fs.time) throw std::invalid_argument("wft_advance: cannot advance backwards");
  for (;;) {
    double t_min = next_collision_time(fs);
    if (!(t_min <= t_target)) break;
    double tol = 1e-13 * std::max(1.0, std::abs(t_min));
    std::vector<Front> out;
    out.reserve(fs.fronts.size());
    out.push_back(fs.fronts[0]);
    for (std::size_t i = 1; i < fs.fronts.size(); ++i) {
      const Front& f = fs.fronts[i];
      if (pair_collision_time(out.back(), f) <= t_min + tol) {
        out.back() = merged_front(out.back(), f, t_min, fs.flux);
      } else {
        out.push_back(f);
      }
    }
    fs.fronts = std::move(out);
    fs.time = t_min;
  }
  fs.time = t_target;
  fs.validate();
  return fs;
}

}  // namespace newtonflow
