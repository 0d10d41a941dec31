#ifndef NEWTONFLOW_ENTROPY_SOLUTION_HPP
#define NEWTONFLOW_ENTROPY_SOLUTION_HPP

#include <variant>
#include <vector>

#include "newtonflow/front_tracking.hpp"
#include "newtonflow/measure.hpp"
#include "newtonflow/piecewise_linear.hpp"

namespace newtonflow {

// Entropy solution of dF/dt + d/dx sigma*F(1-F) = 0 for monotone data.
// Attractive sign and the discretized repulsive flux evolve shock fronts;
// the exact repulsive flux resolves every initial jump into a rarefaction
// fan and every initial density segment into a spreading ramp, in closed
// form. Instances are immutable and safe to evaluate concurrently.
class EntropySolution {
public:
  static EntropySolution riemann(int sigma, double FL, double FR, double x0);
  static EntropySolution attractive(const PiecewiseLinear& F0);
  static EntropySolution repulsive_fan(const PiecewiseLinear& F0);
  static EntropySolution repulsive_wft(const PiecewiseLinear& F0, int N);
  // Exact backend for the sign: attractive front tracking (atomic data only)
  // or the repulsive fan decomposition.
  static EntropySolution solve(const Measure1D& mu0, int sigma);

  int sigma() const { return flux_.sigma; }
  const Flux& flux() const { return flux_; }
  const PiecewiseLinear& initial_cdf() const { return F0_; }

  double evaluate(double x, double t) const;
  PiecewiseLinear cdf_at(double t) const;
  std::vector<double> breakpoints(double t) const;

  bool is_front_tracking() const;
  FrontSet fronts_at(double t) const;          // front backends only
  std::vector<double> event_times() const;     // shock collision times

  // Linear arcs x(t) = pos0 + vel * t traced by solution breakpoints, split
  // at events; used for exact panel splitting in weak-form quadrature.
  struct TrajectoryArc {
    double t_lo, t_hi;
    double pos0, vel;
  };
  std::vector<TrajectoryArc> breakpoint_arcs(double t_max) const;

private:
  struct FanPiece {
    bool is_fan;         // initial jump (x_lo == x_hi); otherwise a ramp
    double x_lo, x_hi;   // initial support interval
    double F_lo, F_hi;
    double rho;          // initial density (ramps only)

    double left_edge(double t) const { return x_lo + (2.0 * F_lo - 1.0) * t; }
    double right_edge(double t) const { return x_hi + (2.0 * F_hi - 1.0) * t; }
    double slope_at(double t) const { return is_fan ? 1.0 / (2.0 * t) : rho / (1.0 + 2.0 * rho * t); }
  };
  struct FanBackend {
    std::vector<FanPiece> pieces;
  };
  struct FrontBackend {
    std::vector<FrontSet> epochs;  // epochs[k] valid on [epochs[k].time, epochs[k+1].time)
  };

  EntropySolution(Flux flux, PiecewiseLinear F0, std::variant<FanBackend, FrontBackend> backend);

  Flux flux_;
  PiecewiseLinear F0_;
  std::variant<FanBackend, FrontBackend> backend_;
};

struct OleinikSampling {
  int per_piece = 8;             // interior samples per solution piece
  std::vector<double> extra_x;   // additional sample abscissae
  std::vector<double> z_values;  // additional chord widths
};

struct OleinikReport {
  double max_ratio = 0.0;  // max of t*(F(x+z)-F(x))/z over samples
  bool pass = false;       // max_ratio <= 1/2 + 1e-9
};

// One-sided Lipschitz check F(x+z,t)-F(x,t) <= z/(2t) for the repulsive
// solution; rejects t <= 0 and attractive input.
OleinikReport oleinik_check(const EntropySolution& sol, double t,
                            const OleinikSampling& sampling = {});

}  // namespace newtonflow

#endif
