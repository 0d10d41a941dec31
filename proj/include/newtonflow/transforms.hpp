#ifndef NEWTONFLOW_TRANSFORMS_HPP
#define NEWTONFLOW_TRANSFORMS_HPP

#include <vector>

#include "newtonflow/measure.hpp"
#include "newtonflow/piecewise_linear.hpp"

namespace newtonflow {

// Maximal constancy interval (alpha, beta) of a quantile, with its value.
// Each interval corresponds to an atom of mass beta - alpha at `value`.
struct FlatInterval {
  double lo;
  double hi;
  double value;
};

struct FlatDecomposition {
  std::vector<FlatInterval> intervals;  // ordered, disjoint, within [0,1]
};

// Right-continuous cumulative distribution function F(x) = mu((-inf, x]).
PiecewiseLinear cdf_of(const Measure1D& mu);

// Pseudo-inverse X(s) = inf{x : F(x) > s}; atoms become flat pieces, support
// gaps become jumps.
PiecewiseLinear quantile_of(const Measure1D& mu);

// Inverse of the two maps above, up to canonicalization. A cdf argument must
// have limits 0 and 1.
Measure1D measure_of(const PiecewiseLinear& f);

FlatDecomposition flat_decomposition(const PiecewiseLinear& quantile);

}  // namespace newtonflow

#endif
