#pragma once

#include <functional>
#include <string>

#include "sgfd/stepper.hpp"

namespace sgfd {

// Everything needed to reproduce one of the reference experiments: domain,
// boundary treatment, equation parameters, initial data, and (when known)
// the exact solution pair for error measurement.
struct Scenario {
  std::string name;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  BcKind bc = BcKind::homogeneous_dirichlet;
  double alpha = 1.0;
  double beta = 0.0;
  std::function<double(double, double)> phi;
  ForcingFn forcing;  // null means F = 0
  std::function<double(double, double)> initial_u, initial_v;
  BoundaryData boundary;  // required when bc == dirichlet
  std::function<double(double, double, double)> exact_u, exact_v;
  std::function<double(double)> display;  // snapshot transform; null = identity
  double default_dt = 0.1;
  double default_t_end = 1.0;
  int default_cells = 20;

  bool has_exact() const {
    return static_cast<bool>(exact_u) && static_cast<bool>(exact_v);
  }
};

// Forced Dirichlet problem on [-1/2, 1/2]^2 with alpha = 1/(2 pi^2) whose
// exact solution is u = cos(pi x) cos(pi y) cos(t); the PDE's linear part
// vanishes on it, so F = sin(u_exact).
Scenario manufactured();

// Undamped membrane on the unit square, homogeneous Dirichlet, u0 =
// sin(2 pi x) sin(2 pi y) at rest: the energy-conservation experiment.
Scenario energy_test();

// Shrinking ring soliton u0 = 2 atan exp(3 - 5 r) at rest on periodic
// [-4, 4]^2; snapshots are conventionally viewed through sin(u/2).
Scenario ring_soliton();

// Lookup by CLI key: "manufactured", "energy", "soliton".
Scenario scenario_by_name(const std::string& key);

// Assembly helpers shared by the harness, the config runner, and tests.
GridSpec scenario_grid(const Scenario& sc, int cells);
SchemeParams scenario_params(const Scenario& sc, const GridSpec& grid,
                             double dt);
SimState initial_state(const Scenario& sc, const GridSpec& grid);

}  // namespace sgfd
