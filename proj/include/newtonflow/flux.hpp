#ifndef NEWTONFLOW_FLUX_HPP
#define NEWTONFLOW_FLUX_HPP

#include <optional>

namespace newtonflow {

// Flux of the conservation law dF/dt + d/dx g(F) = 0 with g(F) = sigma*F*(1-F),
// optionally replaced by its piecewise-linear interpolation g_N at the grid
// points j/N.
struct Flux {
  int sigma = 1;
  std::optional<int> level;  // N for the discretized flux; absent = exact

  static Flux exact(int sigma);
  static Flux discretized(int sigma, int N);

  bool is_discretized() const { return level.has_value(); }

  // Exact quadratic flux.
  double g(double F) const { return sigma * F * (1.0 - F); }

  // Active flux value (g or g_N).
  double operator()(double F) const;

  // Slope of g_N on the cell ((j-1)/N, j/N); algebraically sigma*(N-2j+1)/N.
  double cell_slope(int j) const;

  // Rankine-Hugoniot speed (g(L) - g(R)) / (L - R) of the active flux.
  double rh_speed(double L, double R) const;
};

}  // namespace newtonflow

#endif
