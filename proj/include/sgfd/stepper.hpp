#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sgfd/cg.hpp"
#include "sgfd/grid.hpp"
#include "sgfd/ops.hpp"

namespace sgfd {

// Semi-implicit second-order scheme for the damped 2D sine-Gordon equation
//
//   u_tt + beta u_t - alpha lap(u) = -phi(x, y) sin(u) + F(x, y, t),
//
// advanced as the first-order system (u, v = u_t):
//
//   (v' - v)/dt + beta (u' - u)/dt - (alpha/2) lap_h(u' + u)
//       = phi (cos u' - cos u)/(u' - u) + F(t + dt/2),
//   (u' - u)/dt = (v' + v)/2,
//
// primes marking the new time level. Eliminating v' leaves one implicit
// equation per step,
//
//   A u' = (beta/dt) u + (alpha/2) lap_h u + (2u/dt + 2v)/dt
//          + phi psi(u, u') + F(t + dt/2),          A = c0 I - (alpha/2) lap_h,
//
// with c0 = 2/dt^2 + beta/dt and psi the cosine difference quotient. The
// nonlinearity is resolved by lagging psi: each sweep solves the linear
// system with psi frozen at the previous iterate, seeded at u. For
// dt < timestep_bound(beta, max phi) the sweep map is a contraction, and the
// update conserves the discrete energy exactly when beta = 0, F = 0, and the
// boundary is homogeneous or periodic.
//
// Each sweep is solved incrementally: CG runs on A delta = (sweep residual)
// from a zero guess, so the inner tolerance is relative to a residual that
// itself contracts sweep over sweep, and the converged iterate satisfies the
// implicit equation to iter_tol regardless of the 1/dt^2 scale of its
// right-hand side.

using ForcingFn = std::function<double(double, double, double)>;

struct SchemeParams {
  double alpha = 1.0;
  double beta = 0.0;
  double dt = 0.0;
  Field phi;           // nonlinearity weight, sampled on the run's grid
  ForcingFn forcing;   // null means F = 0
  double iter_tol = 1e-12;
  double cg_tol = 1e-12;
  int max_outer = 100;
  bool guard_warn_only = false;  // demote the dt guard to a stderr warning
};

// max over phi's nodes; the phi0 every bound below uses. Always recomputed
// from the field, never user-supplied. Errors on negative or missing phi.
double phi_bound(const Field& phi);

// Largest stable dt for the lagged-psi contraction,
// (beta + sqrt(beta^2 + 8 phi0)) / (2 phi0); +infinity when phi0 = 0.
double timestep_bound(double beta, double phi0);

// A priori bound sqrt((phi0/2) / (2/dt^2 + beta/dt - phi0/2)) on the
// per-sweep error contraction. Errors when the guard is violated
// (denominator <= phi0/2).
double contraction_rate_bound(const SchemeParams& p);

struct SimState {
  Field u, v;
  long n = 0;
  double t = 0.0;
};

struct StepStats {
  int outer_iterations = 0;
  std::vector<double> contraction_ratios;  // successive-difference quotients
  std::vector<SolveStats> cg_stats;        // one entry per sweep
};

// Owns the workspace so repeated steps allocate nothing. Construction
// validates parameters and enforces the dt guard (throw GuardError, or warn
// when guard_warn_only). Grids with BcKind::dirichlet require boundary data;
// the other kinds ignore it.
class Stepper {
 public:
  explicit Stepper(SchemeParams params, BoundaryData boundary = {});

  // Advances state by one dt in place. Throws SolverError when the outer
  // iteration exhausts max_outer or an inner solve fails.
  StepStats step(SimState& state);

  const SchemeParams& params() const { return params_; }
  const GridSpec& grid() const { return params_.phi.grid(); }
  double phi0() const { return phi0_; }
  int cg_max_iter() const { return cg_max_iter_; }

 private:
  SchemeParams params_;
  BoundaryData boundary_;
  OperatorCoeffs coeffs_;
  double phi0_ = 0.0;
  int cg_max_iter_ = 0;
  Field lap_, rhs_fix_, resid_, delta_, w_;
  CgScratch cg_;
};

// Single-shot convenience wrapper around Stepper.
std::pair<SimState, StepStats> step(const SimState& state,
                                    const SchemeParams& params,
                                    const BoundaryData& boundary = {});

using Observer = std::function<void(const SimState&, const StepStats&)>;

// Steps from `initial` until n dt >= t_end (within 1e-9 dt of it), invoking
// each observer after every step. Returns the final state.
SimState run(const SimState& initial, const SchemeParams& params, double t_end,
             const std::vector<Observer>& observers = {},
             const BoundaryData& boundary = {});

}  // namespace sgfd
