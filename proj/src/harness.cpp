#include "sgfd/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sgfd/ops.hpp"

namespace sgfd {

ErrorReport error_norms(const SimState& state, const Scenario& sc) {
  if (!sc.has_exact()) {
    throw std::invalid_argument("error_norms: scenario '" + sc.name +
                                "' has no exact solution");
  }
  const GridSpec& g = state.u.grid();
  Field eu(g), ev(g);
  const int n = eu.n();
  const double t = state.t;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      eu(i, j) = sc.exact_u(g.x(i), g.y(j), t) - state.u(i, j);
      ev(i, j) = sc.exact_v(g.x(i), g.y(j), t) - state.v(i, j);
    }
  }
  ErrorReport r;
  r.t = t;
  r.err_u = norm2(eu);
  r.err_v = norm2(ev);
  r.err_grad_u = std::sqrt(grad_norm2_sq(eu));
  return r;
}

double observed_order(double err_coarse, double err_fine) {
  if (!(std::isfinite(err_coarse) && err_coarse > 0.0) ||
      !(std::isfinite(err_fine) && err_fine > 0.0)) {
    throw std::invalid_argument("observed_order: errors must be positive");
  }
  return std::log2(err_coarse / err_fine);
}

int cells_for_spacing(const Scenario& sc, double h) {
  if (!(std::isfinite(h) && h > 0.0)) {
    throw std::invalid_argument("cells_for_spacing: h must be > 0");
  }
  const double edge = sc.x_max - sc.x_min;
  const long cells = std::lround(edge / h);
  if (cells < 2 || std::fabs(cells * h - edge) > 1e-9 * edge) {
    std::ostringstream msg;
    msg << "spacing " << h << " does not divide the domain edge " << edge;
    throw std::invalid_argument(msg.str());
  }
  return static_cast<int>(cells);
}

std::vector<ConvergenceRow> convergence_study(
    const Scenario& sc, double base_dt, double base_h, int levels,
    const std::vector<double>& checkpoints, const StudyOptions& opts) {
  if (levels < 1) throw std::invalid_argument("convergence_study: levels < 1");
  if (checkpoints.empty()) {
    throw std::invalid_argument("convergence_study: no checkpoints");
  }
  if (!sc.has_exact()) {
    throw std::invalid_argument("convergence_study: scenario '" + sc.name +
                                "' has no exact solution");
  }
  for (double c : checkpoints) {
    if (!(std::isfinite(c) && c >= 0.0)) {
      throw std::invalid_argument("convergence_study: checkpoints must be >= 0");
    }
  }

  std::vector<ConvergenceRow> rows;
  for (int level = 0; level < levels; ++level) {
    const double scale = std::ldexp(1.0, -level);  // exact halving per level
    const double dt = base_dt * scale;
    const double h = base_h * scale;
    const GridSpec grid = scenario_grid(sc, cells_for_spacing(sc, h));
    SchemeParams params = scenario_params(sc, grid, dt);
    params.iter_tol = opts.iter_tol;
    params.cg_tol = opts.cg_tol;
    params.max_outer = opts.max_outer;

    // Checkpoints snap to the nearest completed step.
    std::set<long> targets;
    long n_max = 0;
    for (double c : checkpoints) {
      const long nc = std::lround(c / dt);
      targets.insert(nc);
      n_max = std::max(n_max, nc);
    }

    ConvergenceRow row;
    row.level = level;
    row.dt = dt;
    row.h = h;

    SimState state = initial_state(sc, grid);
    Stepper stepper(params, sc.boundary);
    if (targets.count(0)) {
      row.checkpoints.push_back({error_norms(state, sc), {}, {}});
    }
    for (long nstep = 1; nstep <= n_max; ++nstep) {
      stepper.step(state);
      if (targets.count(nstep)) {
        row.checkpoints.push_back({error_norms(state, sc), {}, {}});
      }
    }

    if (level > 0) {
      const ConvergenceRow& prev = rows.back();
      for (std::size_t k = 0; k < row.checkpoints.size(); ++k) {
        const double ec_u = prev.checkpoints[k].report.err_u;
        const double ef_u = row.checkpoints[k].report.err_u;
        const double ec_v = prev.checkpoints[k].report.err_v;
        const double ef_v = row.checkpoints[k].report.err_v;
        if (ec_u > 0.0 && ef_u > 0.0) {
          row.checkpoints[k].order_u = observed_order(ec_u, ef_u);
        }
        if (ec_v > 0.0 && ef_v > 0.0) {
          row.checkpoints[k].order_v = observed_order(ec_v, ef_v);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sgfd
