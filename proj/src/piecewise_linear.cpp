#include "newtonflow/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newtonflow {

namespace {

double value_scale(const std::vector<double>& vs) {
  double lo = vs.front(), hi = vs.front();
  for (double v : vs) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return std::max(1.0, hi - lo);
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> vs, PLKind kind)
    : xs_(std::move(xs)), vs_(std::move(vs)), kind_(kind) {
  if (xs_.size() != vs_.size() || xs_.size() < 2) {
    throw std::invalid_argument("PiecewiseLinear: need matching point lists with >= 2 entries");
  }
  for (double x : xs_) {
    if (!std::isfinite(x)) throw std::invalid_argument("PiecewiseLinear: non-finite breakpoint");
  }
  for (double v : vs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("PiecewiseLinear: non-finite value");
  }

  // Drop exact duplicate points.
  std::size_t w = 1;
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (xs_[i] == xs_[w - 1] && vs_[i] == vs_[w - 1]) continue;
    xs_[w] = xs_[i];
    vs_[w] = vs_[i];
    ++w;
  }
  xs_.resize(w);
  vs_.resize(w);
  if (xs_.size() < 2) {
    // A single surviving point: a constant; re-expand to a degenerate pair.
    xs_.push_back(xs_.back());
    vs_.push_back(vs_.back());
  }

  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (xs_[i] < xs_[i - 1]) throw std::invalid_argument("PiecewiseLinear: breakpoints must be non-decreasing");
    if (i >= 2 && xs_[i] == xs_[i - 1] && xs_[i - 1] == xs_[i - 2]) {
      throw std::invalid_argument("PiecewiseLinear: more than two points share an abscissa");
    }
  }

  if (kind_ == PLKind::cdf || kind_ == PLKind::quantile) {
    const double tol = 1e-12 * value_scale(vs_);
    for (std::size_t i = 1; i < vs_.size(); ++i) {
      if (vs_[i] < vs_[i - 1]) {
        if (vs_[i - 1] - vs_[i] > tol) {
          throw std::invalid_argument("PiecewiseLinear: values must be non-decreasing");
        }
        vs_[i] = vs_[i - 1];
      }
    }
  }
  if (kind_ == PLKind::cdf) {
    for (double& v : vs_) {
      if (v < 0.0 || v > 1.0) {
        if (v < -1e-12 || v > 1.0 + 1e-12) {
          throw std::invalid_argument("PiecewiseLinear: cdf values must lie in [0,1]");
        }
        v = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  if (kind_ == PLKind::quantile) {
    if (xs_.front() != 0.0 || xs_.back() != 1.0) {
      throw std::invalid_argument("PiecewiseLinear: quantile breakpoints must span [0,1] exactly");
    }
  }
}

double PiecewiseLinear::operator()(double x) const {
  if (x < xs_.front()) return vs_.front();
  if (x >= xs_.back()) return vs_.back();
  // Last index with xs_[j] <= x; for jump pairs this picks the upper value.
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t j = static_cast<std::size_t>(it - xs_.begin()) - 1;
  if (xs_[j] == x) return vs_[j];
  double h = xs_[j + 1] - xs_[j];
  return vs_[j] + (vs_[j + 1] - vs_[j]) * ((x - xs_[j]) / h);
}

double PiecewiseLinear::left_limit(double x) const {
  if (x <= xs_.front()) return vs_.front();
  if (x > xs_.back()) return vs_.back();
  // First index with xs_[j] >= x; for jump pairs this picks the lower value.
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  std::size_t j = static_cast<std::size_t>(it - xs_.begin());
  if (j < xs_.size() && xs_[j] == x) return vs_[j];
  double h = xs_[j] - xs_[j - 1];
  return vs_[j - 1] + (vs_[j] - vs_[j - 1]) * ((x - xs_[j - 1]) / h);
}

bool PiecewiseLinear::is_piecewise_constant() const {
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (xs_[i + 1] > xs_[i] && vs_[i + 1] != vs_[i]) return false;
  }
  return true;
}

bool PiecewiseLinear::has_jump() const {
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (xs_[i + 1] == xs_[i] && vs_[i + 1] != vs_[i]) return true;
  }
  return false;
}

bool PiecewiseLinear::is_non_decreasing() const {
  for (std::size_t i = 1; i < vs_.size(); ++i) {
    if (vs_[i] < vs_[i - 1]) return false;
  }
  return true;
}

bool PiecewiseLinear::is_probability_cdf(double tol) const {
  return is_non_decreasing() && std::abs(vs_.front()) <= tol && std::abs(vs_.back() - 1.0) <= tol;
}

PiecewiseLinear PiecewiseLinear::plus_linear(double a, double b, PLKind kind) const {
  std::vector<double> vs(vs_.size());
  for (std::size_t i = 0; i < vs_.size(); ++i) vs[i] = vs_[i] + a * xs_[i] + b;
  return PiecewiseLinear(xs_, std::move(vs), kind);
}

}  // namespace newtonflow
