#ifndef NEWTONFLOW_WEAK_FORM_HPP
#define NEWTONFLOW_WEAK_FORM_HPP

#include <vector>

#include "newtonflow/entropy_solution.hpp"

namespace newtonflow {

// Compactly supported piecewise polynomial in one variable; zero outside the
// knot hull. Cell i carries coefficients in the local coordinate x - knot[i].
class PiecewisePoly {
public:
  PiecewisePoly(std::vector<double> knots, std::vector<std::vector<double>> cells);

  double operator()(double x) const;
  PiecewisePoly derivative() const;
  const std::vector<double>& knots() const { return knots_; }
  int max_degree() const;

  static PiecewisePoly tent(double lo, double mid, double hi, double height = 1.0);
  // C^1 bump ((x-lo)(hi-x))^2, normalized to peak 1.
  static PiecewisePoly bump(double lo, double hi);

private:
  std::vector<double> knots_;
  std::vector<std::vector<double>> cells_;
};

// Separable test function phi(x,t) = space(x) * time(t).
struct TestFunction {
  TestFunction(PiecewisePoly space_part, PiecewisePoly time_part);

  PiecewisePoly space, time;
  PiecewisePoly space_dx, time_dt;

  double value(double x, double t) const { return space(x) * time(t); }
  double dx(double x, double t) const { return space_dx(x) * time(t); }
  double dt(double x, double t) const { return space(x) * time_dt(t); }
};

// Defect of the distributional formulation
//   int F0 phi(.,0) dx + int int [F phi_t + g(F) phi_x] dx dt
// with g(F) = sigma F(1-F). Space integrals are exact per cell; time panels
// are split at every event, knot, and breakpoint-crossing time so the
// integrand is smooth on each panel.
double weak_residual(const EntropySolution& sol, const TestFunction& phi);

}  // namespace newtonflow

#endif
