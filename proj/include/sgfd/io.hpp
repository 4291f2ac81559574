#pragma once

#include <string>
#include <vector>

#include "sgfd/energy.hpp"
#include "sgfd/harness.hpp"

namespace sgfd {

// CSV with header n,t,kinetic,gradient,potential,total; reals rendered as
// %.16e (17 significant digits, enough to round-trip doubles exactly), LF
// line endings.
void write_energy_csv(const std::string& path,
                      const std::vector<EnergySample>& series);
std::vector<EnergySample> read_energy_csv(const std::string& path);

// CSV with header level,dt,h,t,err_u,err_v,err_grad_u,order_u,order_v; one
// line per (level, checkpoint), order cells empty where no coarser level
// exists.
void write_error_csv(const std::string& path,
                     const std::vector<ConvergenceRow>& rows);

// Legacy ASCII VTK structured-points snapshot of one field, values row-major
// with i fastest, scalar array named "u".
void write_vtk_snapshot(const std::string& path, const Field& f, double t);

// Node-wise transform, e.g. the soliton display map sin(u/2).
Field transformed(const Field& f, const std::function<double(double)>& fn);

}  // namespace sgfd
