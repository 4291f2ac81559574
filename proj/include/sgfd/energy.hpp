#pragma once

#include <utility>
#include <vector>

#include "sgfd/stepper.hpp"

namespace sgfd {

// One evaluation of the discrete energy
//
//   E^n = 1/2 |v|^2 + (alpha/2) |grad_h u|^2 + h^2 sum phi (1 - cos u),
//
// the quantity the undamped, force-free scheme conserves exactly on
// homogeneous or periodic boundaries, and decays monotonically when beta > 0.
struct EnergySample {
  long n = 0;
  double t = 0.0;
  double kinetic = 0.0;
  double gradient = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

EnergySample discrete_energy(const SimState& state, const SchemeParams& params);

// (max |E^n - E^0|, same normalized by max(1, |E^0|)). Errors on an empty
// series.
std::pair<double, double> energy_drift(const std::vector<EnergySample>& series);

// True when the conservation hypotheses hold: beta = 0, no forcing, and a
// homogeneous-Dirichlet or periodic boundary.
bool conserving_setup(const GridSpec& grid, const SchemeParams& params);

}  // namespace sgfd
