#include "newtonflow/particle_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace newtonflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Measure1D ParticleState::to_measure() const {
  std::vector<Atom> atoms;
  atoms.reserve(particles.size());
  for (const Particle& p : particles) atoms.push_back({p.position, p.mass});
  return Measure1D(std::move(atoms), {});
}

std::vector<double> AttractiveParticleFlow::velocities(const std::vector<Particle>& particles) {
  std::vector<double> v(particles.size());
  double below = 0.0;
  for (std::size_t j = 0; j < particles.size(); ++j) {
    double upto = below + particles[j].mass;
    v[j] = 1.0 - (below + upto);
    below = upto;
  }
  return v;
}

AttractiveParticleFlow::AttractiveParticleFlow(const Measure1D& mu0) {
  if (!mu0.is_atomic()) {
    throw std::invalid_argument("AttractiveParticleFlow: initial measure must be atomic");
  }
  ParticleState state;
  state.time = 0.0;
  int index = 0;
  for (const Atom& a : mu0.atoms()) {
    state.particles.push_back({a.position, a.mass, {index++}});
  }

  for (;;) {
    std::vector<double> v = velocities(state.particles);
    events_.push_back(state);
    event_velocities_.push_back(v);
    if (state.particles.size() == 1) break;

    // Every adjacent pair approaches (v_j - v_{j+1} = m_j + m_{j+1} > 0), so
    // a next collision always exists until one particle remains.
    double t_min = kInf;
    for (std::size_t j = 0; j + 1 < state.particles.size(); ++j) {
      double gap = state.particles[j + 1].position - state.particles[j].position;
      double closing = v[j] - v[j + 1];
      t_min = std::min(t_min, state.time + gap / closing);
    }

    ParticleState next;
    next.time = t_min;
    double tol = 1e-13 * std::max(1.0, std::abs(t_min));
    double dt = t_min - state.time;
    for (std::size_t j = 0; j < state.particles.size(); ++j) {
      Particle p = state.particles[j];
      p.position += v[j] * dt;
      if (!next.particles.empty()) {
        Particle& q = next.particles.back();
        if (p.position - q.position <= tol) {
          // Merge at the common collision point (the left member's position).
          q.mass += p.mass;
          q.members.insert(q.members.end(), p.members.begin(), p.members.end());
          continue;
        }
      }
      next.particles.push_back(std::move(p));
    }
    state = std::move(next);
  }
}

ParticleState AttractiveParticleFlow::at(double t) const {
  if (t < 0.0) throw std::invalid_argument("AttractiveParticleFlow: t must be non-negative");
  std::size_t k = events_.size() - 1;
  while (k > 0 && events_[k].time > t) --k;
  ParticleState state = events_[k];
  const std::vector<double>& v = event_velocities_[k];
  double dt = t - state.time;
  for (std::size_t j = 0; j < state.particles.size(); ++j) {
    state.particles[j].position += v[j] * dt;
  }
  state.time = t;
  return state;
}

std::vector<double> AttractiveParticleFlow::event_times() const {
  std::vector<double> out;
  for (std::size_t k = 1; k < events_.size(); ++k) out.push_back(events_[k].time);
  return out;
}

ParticleState attractive_particle_flow(const Measure1D& mu0, double t) {
  return AttractiveParticleFlow(mu0).at(t);
}

}  // namespace newtonflow
