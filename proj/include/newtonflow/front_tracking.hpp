#ifndef NEWTONFLOW_FRONT_TRACKING_HPP
#define NEWTONFLOW_FRONT_TRACKING_HPP

#include <cstddef>
#include <vector>

#include "newtonflow/flux.hpp"
#include "newtonflow/piecewise_linear.hpp"

namespace newtonflow {

// A shock front x(t) = birth_position + speed * (t - birth_time) separating
// two constant states with right_state > left_state. The anchored form keeps
// trajectories bit-reproducible across staged advances.
struct Front {
  double birth_time;
  double birth_position;
  double speed;
  double left_state;
  double right_state;

  double position_at(double t) const { return birth_position + speed * (t - birth_time); }
};

// Position-ordered fronts with chained states; the constant state between
// front i and i+1 is fronts[i].right_state == fronts[i+1].left_state.
struct FrontSet {
  double time = 0.0;
  Flux flux = Flux::exact(1);
  std::vector<Front> fronts;

  void validate() const;  // ordering, state chain, Rankine-Hugoniot residual
};

// Builds the initial front set for piecewise-constant data F0 (jumps only).
// Exact flux requires sigma = +1 (increasing jumps are admissible shocks);
// the discretized flux requires sigma = -1 and grid-aligned states, and
// splits every jump into one front per flux cell.
FrontSet wft_init(const PiecewiseLinear& F0, const Flux& flux);

// Event-driven advance to t_target: processes shock collisions in time order
// (simultaneous groups left to right), merging colliding fronts into one
// with the outer states and a fresh Rankine-Hugoniot speed.
FrontSet wft_advance(FrontSet fs, double t_target);

// Earliest future collision time, or +infinity.
double next_collision_time(const FrontSet& fs);

// Merge of fronts i and i+1 at event time t (positions must coincide there);
// exposed so merge-order invariance can be exercised directly.
FrontSet merge_adjacent(FrontSet fs, std::size_t i, double t);

}  // namespace newtonflow

#endif
