// Command-line front end: scenario runs from JSON configs, convergence
// studies, and the two long-horizon experiments (energy conservation, ring
// soliton). Exit codes: 0 success, 1 usage/config error, 2 solver failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgfd/config.hpp"
#include "sgfd/errors.hpp"
#include "sgfd/harness.hpp"
#include "sgfd/io.hpp"

namespace {

int do_run(const std::string& config_path, const std::string& out_override) {
  sgfd::RunConfig cfg = sgfd::load_run_config(config_path);
  if (!out_override.empty()) cfg.output_dir = out_override;
  sgfd::run_simulation(cfg);
  return 0;
}

int do_converge(const std::string& scenario_key, double base_dt, double base_h,
                int levels, std::vector<double> checkpoints,
                const std::string& out_dir) {
  const sgfd::Scenario sc = sgfd::scenario_by_name(scenario_key);
  if (checkpoints.empty()) checkpoints = {1.0, 2.0, 3.0, 4.0, 5.0};
  const auto rows =
      sgfd::convergence_study(sc, base_dt, base_h, levels, checkpoints);
  std::filesystem::create_directories(out_dir);
  const auto path = (std::filesystem::path(out_dir) / "errors.csv").string();
  sgfd::write_error_csv(path, rows);
  for (const auto& row : rows) {
    std::printf("level %d (dt = %g, h = %g):\n", row.level, row.dt, row.h);
    for (const auto& cp : row.checkpoints) {
      std::printf("  t = %-4g err_u = %.7e err_v = %.7e", cp.report.t,
                  cp.report.err_u, cp.report.err_v);
      if (cp.order_u) std::printf(" order_u = %.4f", *cp.order_u);
      if (cp.order_v) std::printf(" order_v = %.4f", *cp.order_v);
      std::printf("\n");
    }
  }
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-difference solver for the damped 2D sine-Gordon equation"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  auto* cmd_run = app.add_subcommand("run", "run a scenario from a JSON config");
  cmd_run->add_option("--config", config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  std::string run_out;
  cmd_run->add_option("--out", run_out, "override the config's output_dir");

  std::string scenario_key = "manufactured";
  double base_dt = 0.2, base_h = 0.1, dt = 0.0, h = 0.0, t_end = 0.0;
  int levels = 3;
  long snap_every = 0;
  std::vector<double> checkpoints;
  auto* cmd_conv = app.add_subcommand(
      "converge", "halving convergence study against the exact solution");
  cmd_conv->add_option("--scenario", scenario_key, "scenario key")
      ->capture_default_str();
  cmd_conv->add_option("--base-dt", base_dt, "coarsest time step")->required();
  cmd_conv->add_option("--base-h", base_h, "coarsest grid spacing")->required();
  cmd_conv->add_option("--levels", levels, "number of refinement levels")
      ->required();
  cmd_conv->add_option("--checkpoints", checkpoints,
                       "comma-separated report times (default 1..5)")
      ->delimiter(',');
  cmd_conv->add_option("--out", out_dir, "output directory")
      ->capture_default_str();

  auto* cmd_energy = app.add_subcommand(
      "energy", "undamped membrane run with energy-conservation report");
  cmd_energy->set_help_flag("--help", "print help and exit");  // frees --h
  cmd_energy->add_option("--dt", dt, "time step")->required();
  cmd_energy->add_option("--h", h, "grid spacing")->required();
  cmd_energy->add_option("--t-end", t_end, "final time")->required();
  cmd_energy->add_option("--out", out_dir, "output directory")
      ->capture_default_str();

  auto* cmd_soliton =
      app.add_subcommand("soliton", "ring soliton run with VTK snapshots");
  cmd_soliton->set_help_flag("--help", "print help and exit");  // frees --h
  cmd_soliton->add_option("--dt", dt, "time step")->required();
  cmd_soliton->add_option("--h", h, "grid spacing")->required();
  cmd_soliton->add_option("--t-end", t_end, "final time")->required();
  cmd_soliton->add_option("--snap-every", snap_every, "snapshot stride in steps")
      ->required();
  cmd_soliton->add_option("--out", out_dir, "output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_run->parsed()) return do_run(config_path, run_out);
    if (cmd_conv->parsed()) {
      return do_converge(scenario_key, base_dt, base_h, levels, checkpoints,
                         out_dir);
    }
    sgfd::RunConfig cfg;
    cfg.output_dir = out_dir;
    cfg.dt = dt;
    cfg.t_end = t_end;
    if (cmd_energy->parsed()) {
      cfg.scenario = "energy";
      cfg.m = sgfd::cells_for_spacing(sgfd::energy_test(), h);
    } else {
      cfg.scenario = "soliton";
      cfg.m = sgfd::cells_for_spacing(sgfd::ring_soliton(), h);
      cfg.snap_every = snap_every;
    }
    sgfd::run_simulation(cfg);
    return 0;
  } catch (const sgfd::SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
