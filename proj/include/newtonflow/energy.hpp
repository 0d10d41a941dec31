#ifndef NEWTONFLOW_ENERGY_HPP
#define NEWTONFLOW_ENERGY_HPP

#include "newtonflow/measure.hpp"

namespace newtonflow {

struct EnergyParts {
  double linear_form;  // sigma * integral (2s-1) X(s) ds
  double double_sum;   // (sigma/2) * double integral |x-y| dmu dmu, per-pair closed forms
};

// Both evaluations of the interaction energy W[mu] with kernel sigma*|x-y|.
EnergyParts interaction_energy_parts(const Measure1D& mu, int sigma);

// The linear-form value; throws if the two routes disagree beyond 1e-10.
double interaction_energy(const Measure1D& mu, int sigma);

}  // namespace newtonflow

#endif
