#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sgfd {

enum class GuardMode { error, warn };

// Flat run description, loadable from a JSON file whose keys are exactly
// these field names. Optional fields fall back to the scenario's defaults.
struct RunConfig {
  std::string scenario;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> dt;
  std::optional<int> m;  // cells per axis, hence h
  std::optional<double> t_end;
  double iter_tol = 1e-12;
  double cg_tol = 1e-12;
  int max_outer = 100;
  GuardMode guard_mode = GuardMode::error;
  std::string output_dir = ".";
  long snap_every = 0;  // VTK snapshot stride in steps; 0 disables
  std::vector<double> checkpoints;  // error-report times (needs exact solution)
};

// Strict parse: unknown keys and malformed values are errors
// (std::invalid_argument).
RunConfig load_run_config(const std::string& path);

// Runs the configured scenario and writes energy.csv (always), errors.csv
// (when checkpoints are set and the scenario has an exact solution), and
// snapshot_NNNNNN.vtk files (when snap_every > 0) into output_dir. Progress
// summary goes to stdout. Throws SolverError/GuardError on solver failure.
void run_simulation(const RunConfig& cfg);

}  // namespace sgfd
