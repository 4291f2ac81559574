#pragma once

#include <stdexcept>
#include <string>

namespace sgfd {

// Runtime failure of the linear or nonlinear solve: stalled conjugate
// gradients, outer iteration exceeding its sweep budget, non-finite values.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Time step rejected by the convergence guard dt < timestep_bound(beta, phi0).
struct GuardError : SolverError {
  GuardError(const std::string& msg, double bound_) : SolverError(msg), bound(bound_) {}
  double bound;
};

}  // namespace sgfd
