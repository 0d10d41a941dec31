#ifndef NEWTONFLOW_QUADRATURE_HPP
#define NEWTONFLOW_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace newtonflow {

// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
// Newton iteration on the Legendre recurrence (accurate to ~1 ulp).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

// Integral of f over [a, b] with the n-point rule (exact for polynomials of
// degree <= 2n-1).
double integrate(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace newtonflow

#endif
