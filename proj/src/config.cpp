#include "sgfd/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sgfd/energy.hpp"
#include "sgfd/io.hpp"
#include "sgfd/scenarios.hpp"

namespace fs = std::filesystem;

namespace sgfd {

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config parse error in " + path + ": " +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config must be a JSON object: " + path);
  }

  RunConfig cfg;
  for (const auto& [key, val] : j.items()) {
    try {
      if (key == "scenario") {
        cfg.scenario = val.get<std::string>();
      } else if (key == "alpha") {
        cfg.alpha = val.get<double>();
      } else if (key == "beta") {
        cfg.beta = val.get<double>();
      } else if (key == "dt") {
        cfg.dt = val.get<double>();
      } else if (key == "m") {
        cfg.m = val.get<int>();
      } else if (key == "t_end") {
        cfg.t_end = val.get<double>();
      } else if (key == "iter_tol") {
        cfg.iter_tol = val.get<double>();
      } else if (key == "cg_tol") {
        cfg.cg_tol = val.get<double>();
      } else if (key == "max_outer") {
        cfg.max_outer = val.get<int>();
      } else if (key == "guard_mode") {
        const auto s = val.get<std::string>();
        if (s == "error") {
          cfg.guard_mode = GuardMode::error;
        } else if (s == "warn") {
          cfg.guard_mode = GuardMode::warn;
        } else {
          throw std::invalid_argument("guard_mode must be 'error' or 'warn'");
        }
      } else if (key == "output_dir") {
        cfg.output_dir = val.get<std::string>();
      } else if (key == "snap_every") {
        cfg.snap_every = val.get<long>();
      } else if (key == "checkpoints") {
        cfg.checkpoints = val.get<std::vector<double>>();
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("bad value for config key '" + key +
                                  "': " + e.what());
    }
  }

  if (cfg.scenario.empty()) {
    throw std::invalid_argument("config missing required key 'scenario'");
  }
  if (cfg.dt && !(*cfg.dt > 0.0 && std::isfinite(*cfg.dt))) {
    throw std::invalid_argument("config: dt must be finite and > 0");
  }
  if (cfg.t_end && !(*cfg.t_end >= 0.0 && std::isfinite(*cfg.t_end))) {
    throw std::invalid_argument("config: t_end must be finite and >= 0");
  }
  if (cfg.m && *cfg.m < 2) {
    throw std::invalid_argument("config: m must be >= 2");
  }
  if (!(cfg.iter_tol > 0.0) || !(cfg.cg_tol > 0.0)) {
    throw std::invalid_argument("config: tolerances must be > 0");
  }
  if (cfg.max_outer < 1) {
    throw std::invalid_argument("config: max_outer must be >= 1");
  }
  if (cfg.snap_every < 0) {
    throw std::invalid_argument("config: snap_every must be >= 0");
  }
  return cfg;
}

void run_simulation(const RunConfig& cfg) {
  Scenario sc = scenario_by_name(cfg.scenario);
  if (cfg.alpha) sc.alpha = *cfg.alpha;
  if (cfg.beta) sc.beta = *cfg.beta;
  const int cells = cfg.m.value_or(sc.default_cells);
  const double dt = cfg.dt.value_or(sc.default_dt);
  const double t_end = cfg.t_end.value_or(sc.default_t_end);

  const GridSpec grid = scenario_grid(sc, cells);
  SchemeParams params = scenario_params(sc, grid, dt);
  params.iter_tol = cfg.iter_tol;
  params.cg_tol = cfg.cg_tol;
  params.max_outer = cfg.max_outer;
  params.guard_warn_only = cfg.guard_mode == GuardMode::warn;

  if (!cfg.checkpoints.empty() && !sc.has_exact()) {
    throw std::invalid_argument("scenario '" + sc.name +
                                "' has no exact solution for checkpoints");
  }

  // Construct before touching the filesystem so the dt guard fires first.
  Stepper stepper(params, sc.boundary);
  SimState state = initial_state(sc, grid);

  fs::create_directories(cfg.output_dir);
  const auto out_path = [&cfg](const std::string& name) {
    return (fs::path(cfg.output_dir) / name).string();
  };

  std::vector<EnergySample> energy;
  energy.push_back(discrete_energy(state, params));

  long snapshots = 0;
  const auto write_snap = [&](const SimState& s) {
    char name[40];
    std::snprintf(name, sizeof name, "snapshot_%06ld.vtk", s.n);
    write_vtk_snapshot(out_path(name), transformed(s.u, sc.display), s.t);
    ++snapshots;
  };
  if (cfg.snap_every > 0) write_snap(state);

  std::set<long> targets;
  for (double c : cfg.checkpoints) targets.insert(std::lround(c / dt));
  ConvergenceRow reports;
  reports.level = 0;
  reports.dt = dt;
  reports.h = grid.spacing;
  if (targets.count(0)) {
    reports.checkpoints.push_back({error_norms(state, sc), {}, {}});
  }

  int max_sweeps = 0;
  int max_cg = 0;
  const double fuzz = 1e-9 * dt;
  while (state.t < t_end - fuzz) {
    const StepStats stats = stepper.step(state);
    max_sweeps = std::max(max_sweeps, stats.outer_iterations);
    for (const auto& cs : stats.cg_stats) max_cg = std::max(max_cg, cs.iterations);
    energy.push_back(discrete_energy(state, params));
    if (cfg.snap_every > 0 && state.n % cfg.snap_every == 0) write_snap(state);
    if (targets.count(state.n)) {
      reports.checkpoints.push_back({error_norms(state, sc), {}, {}});
    }
  }

  std::printf("scenario %s: %ld steps to t = %g on a %dx%d grid (h = %g, dt = %g)\n",
              sc.name.c_str(), state.n, state.t, grid.nodes_per_axis(),
              grid.nodes_per_axis(), grid.spacing, dt);
  if (state.n > 0) {
    std::printf("max outer sweeps %d, max cg iterations %d\n", max_sweeps,
                max_cg);
  }
  const auto [drift_abs, drift_rel] = energy_drift(energy);
  std::printf("energy E0 = %.16e, drift max|E-E0| = %.3e (relative %.3e)%s\n",
              energy.front().total, drift_abs, drift_rel,
              conserving_setup(grid, params) ? " [conservative setup]" : "");

  write_energy_csv(out_path("energy.csv"), energy);
  std::printf("wrote %s\n", out_path("energy.csv").c_str());
  if (!reports.checkpoints.empty()) {
    write_error_csv(out_path("errors.csv"), {reports});
    std::printf("wrote %s (%zu checkpoints)\n", out_path("errors.csv").c_str(),
                reports.checkpoints.size());
  }
  if (snapshots > 0) {
    std::printf("wrote %ld VTK snapshots into %s\n", snapshots,
                cfg.output_dir.c_str());
  }
}

}  // namespace sgfd
