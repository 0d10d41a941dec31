#ifndef NEWTONFLOW_PARTICLE_FLOW_HPP
#define NEWTONFLOW_PARTICLE_FLOW_HPP

#include <vector>

#include "newtonflow/measure.hpp"

namespace newtonflow {

struct Particle {
  double position;
  double mass;
  std::vector<int> members;  // indices of the initial atoms aggregated here
};

struct ParticleState {
  double time = 0.0;
  std::vector<Particle> particles;  // strictly increasing positions

  Measure1D to_measure() const;
};

// Attractive sticky-particle dynamics: velocity 1 - M^- - M^+ per particle
// (mass strictly left / mass up to and including the particle; the
// self-interaction term is dropped, sign(0) = 0). Velocities are piecewise
// constant between collisions; colliding particles merge at the collision
// point and all velocities are recomputed. The whole event schedule is built
// at construction, after which evaluation at any time is a single step.
class AttractiveParticleFlow {
public:
  explicit AttractiveParticleFlow(const Measure1D& mu0);  // atoms only

  ParticleState at(double t) const;
  const std::vector<ParticleState>& events() const { return events_; }
  std::vector<double> event_times() const;

  static std::vector<double> velocities(const std::vector<Particle>& particles);

private:
  std::vector<ParticleState> events_;               // states at event times, events_[0].time == 0
  std::vector<std::vector<double>> event_velocities_;
};

ParticleState attractive_particle_flow(const Measure1D& mu0, double t);

}  // namespace newtonflow

#endif
