#include "newtonflow/flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newtonflow {

Flux Flux::exact(int sigma) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("Flux: sigma must be +-1");
  return Flux{sigma, std::nullopt};
}

Flux Flux::discretized(int sigma, int N) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("Flux: sigma must be +-1");
  if (N < 1) throw std::invalid_argument("Flux: discretization level must be positive");
  return Flux{sigma, N};
}

double Flux::operator()(double F) const {
  if (!level) return g(F);
  int N = *level;
  int j = std::clamp(static_cast<int>(std::floor(F * N)) + 1, 1, N);
  double Fj0 = static_cast<double>(j - 1) / N;
  return g(Fj0) + cell_slope(j) * (F - Fj0);
}

double Flux::cell_slope(int j) const {
  int N = level.value();
  return sigma * static_cast<double>(N - 2 * j + 1) / N;
}

double Flux::rh_speed(double L, double R) const {
  if (L == R) throw std::invalid_argument("Flux: Rankine-Hugoniot needs distinct states");
  if (!level) {
    // (g(L)-g(R))/(L-R) simplifies to sigma*(1-(L+R)).
    return sigma * (1.0 - (L + R));
  }
  int N = *level;
  double jL = L * N, jR = R * N;
  int cL = static_cast<int>(std::llround(jL));
  int cR = static_cast<int>(std::llround(jR));
  if (std::abs(jL - cL) < 1e-9 && std::abs(jR - cR) < 1e-9 && cR == cL + 1) {
    return cell_slope(cR);  // single-cell jump: the cell slope, integer-exact
  }
  return ((*this)(L) - (*this)(R)) / (L - R);
}

}  // namespace newtonflow
