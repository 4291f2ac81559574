#pragma once

#include <optional>
#include <vector>

#include "sgfd/scenarios.hpp"

namespace sgfd {

// Discrete L2 norms of u_exact - u, v_exact - v, and the forward-difference
// gradient of the u error, all at the state's time.
struct ErrorReport {
  double t = 0.0;
  double err_u = 0.0;
  double err_v = 0.0;
  double err_grad_u = 0.0;
};

// Errors if the scenario carries no exact solution.
ErrorReport error_norms(const SimState& state, const Scenario& sc);

// log2(err_coarse / err_fine): the observed order under simultaneous halving
// of dt and h. Errors on non-positive or non-finite inputs.
double observed_order(double err_coarse, double err_fine);

struct CheckpointResult {
  ErrorReport report;
  // vs. the same checkpoint one level coarser; empty on the first level or
  // when either error vanishes.
  std::optional<double> order_u, order_v;
};

struct ConvergenceRow {
  int level = 0;
  double dt = 0.0;
  double h = 0.0;
  std::vector<CheckpointResult> checkpoints;
};

struct StudyOptions {
  double iter_tol = 1e-12;
  double cg_tol = 1e-12;
  int max_outer = 100;
};

// Runs `levels` refinements of the scenario, halving dt and h per level from
// (base_dt, base_h), recording error norms at each checkpoint time (snapped
// to the nearest completed step) and observed orders against the previous
// level. Checkpoint t = 0 records the initial data. Errors: levels < 1,
// empty checkpoints, base_h not dividing the domain edge, or a scenario
// without an exact solution.
std::vector<ConvergenceRow> convergence_study(
    const Scenario& sc, double base_dt, double base_h, int levels,
    const std::vector<double>& checkpoints, const StudyOptions& opts = {});

// Cell count for a requested spacing; errors unless h divides the domain
// edge to 1e-9 relative.
int cells_for_spacing(const Scenario& sc, double h);

}  // namespace sgfd
