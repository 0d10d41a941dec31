#ifndef NEWTONFLOW_PIECEWISE_LINEAR_HPP
#define NEWTONFLOW_PIECEWISE_LINEAR_HPP

#include <cstddef>
#include <vector>

namespace newtonflow {

// Interpretation tag for a PiecewiseLinear function.
//   cdf      -- non-decreasing function of x, constant outside the breakpoint
//               hull (front value to the left, back value to the right),
//               values in [0,1], right-continuous at jumps.
//   quantile -- non-decreasing function on (0,1); breakpoints span [0,1]
//               exactly; right-continuous at jumps.
//   generic  -- piecewise-linear function with no monotonicity requirement.
enum class PLKind { cdf, quantile, generic };

// Piecewise-linear function with jump support. Points (x_i, v_i) are stored
// with x_i non-decreasing; a repeated abscissa (x, v-), (x, v+) encodes a
// jump (never two distinct abscissae an epsilon apart). Evaluation is
// right-continuous.
class PiecewiseLinear {
public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> vs, PLKind kind);

  // Right-continuous value; constant extension outside the breakpoint hull.
  double operator()(double x) const;
  // Left limit at x (equals operator() except at jump abscissae).
  double left_limit(double x) const;

  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& vs() const { return vs_; }
  PLKind kind() const { return kind_; }

  double min_x() const { return xs_.front(); }
  double max_x() const { return xs_.back(); }
  double front_value() const { return vs_.front(); }
  double back_value() const { return vs_.back(); }

  bool is_piecewise_constant() const;  // every non-vertical piece is flat
  bool has_jump() const;
  bool is_non_decreasing() const;
  bool is_probability_cdf(double tol = 1e-12) const;

  // f(x) + a*x + b on the same breakpoints, retagged as `kind`.
  PiecewiseLinear plus_linear(double a, double b, PLKind kind) const;

private:
  std::vector<double> xs_, vs_;
  PLKind kind_;
};

}  // namespace newtonflow

#endif
