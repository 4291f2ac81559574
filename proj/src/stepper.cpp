#include "sgfd/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sgfd/errors.hpp"
#include "sgfd/nonlinearity.hpp"

namespace sgfd {

double phi_bound(const Field& phi) {
  if (phi.empty()) throw std::invalid_argument("phi_bound: empty field");
  double m = 0.0;
  const std::size_t count = phi.size();
  for (std::size_t k = 0; k < count; ++k) {
    if (!(phi[k] >= 0.0) || !std::isfinite(phi[k])) {
      throw std::invalid_argument("phi_bound: phi must be finite and >= 0");
    }
    m = std::max(m, phi[k]);
  }
  return m;
}

double timestep_bound(double beta, double phi0) {
  if (!(std::isfinite(beta) && beta >= 0.0)) {
    throw std::invalid_argument("timestep_bound: beta must be >= 0");
  }
  if (!(std::isfinite(phi0) && phi0 >= 0.0)) {
    throw std::invalid_argument("timestep_bound: phi0 must be >= 0");
  }
  if (phi0 == 0.0) return std::numeric_limits<double>::infinity();
  return (beta + std::sqrt(beta * beta + 8.0 * phi0)) / (2.0 * phi0);
}

double contraction_rate_bound(const SchemeParams& p) {
  const double phi0 = phi_bound(p.phi);
  if (!(std::isfinite(p.dt) && p.dt > 0.0)) {
    throw std::invalid_argument("contraction_rate_bound: dt must be > 0");
  }
  if (phi0 == 0.0) return 0.0;
  const double denom = 2.0 / (p.dt * p.dt) + p.beta / p.dt - 0.5 * phi0;
  if (!(denom > 0.5 * phi0)) {
    std::ostringstream msg;
    msg << "contraction_rate_bound: dt = " << p.dt
        << " violates the guard dt < " << timestep_bound(p.beta, phi0);
    throw GuardError(msg.str(), timestep_bound(p.beta, phi0));
  }
  return std::sqrt(0.5 * phi0 / denom);
}

Stepper::Stepper(SchemeParams params, BoundaryData boundary)
    : params_(std::move(params)), boundary_(std::move(boundary)) {
  phi0_ = phi_bound(params_.phi);
  coeffs_ = make_coeffs(params_.alpha, params_.beta, params_.dt);
  if (!(std::isfinite(params_.iter_tol) && params_.iter_tol > 0.0)) {
    throw std::invalid_argument("Stepper: iter_tol must be > 0");
  }
  if (!(std::isfinite(params_.cg_tol) && params_.cg_tol > 0.0)) {
    throw std::invalid_argument("Stepper: cg_tol must be > 0");
  }
  if (params_.max_outer < 1) {
    throw std::invalid_argument("Stepper: max_outer must be >= 1");
  }
  const GridSpec& g = params_.phi.grid();
  if (g.bc == BcKind::dirichlet && !boundary_) {
    throw std::invalid_argument(
        "Stepper: Dirichlet grid needs boundary data (use "
        "homogeneous_dirichlet for a zero boundary)");
  }

  if (phi0_ > 0.0) {
    const double bound = timestep_bound(params_.beta, phi0_);
    if (!(params_.dt < bound)) {
      std::ostringstream msg;
      msg << "time step dt = " << params_.dt
          << " breaks the iteration convergence guard dt < " << bound
          << " (beta = " << params_.beta << ", max phi = " << phi0_ << ")";
      if (params_.guard_warn_only) {
        std::fprintf(stderr, "warning: %s\n", msg.str().c_str());
      } else {
        throw GuardError(msg.str(), bound);
      }
    }
  }

  const int m = g.cells;
  const long unknowns =
      g.periodic() ? static_cast<long>(m) * m
                   : static_cast<long>(m - 1) * (m - 1);
  cg_max_iter_ = static_cast<int>(10.0 * std::sqrt(static_cast<double>(
                                             std::max(1L, unknowns)))) + 100;

  lap_ = Field(g);
  rhs_fix_ = Field(g);
  resid_ = Field(g);
  delta_ = Field(g);
  w_ = Field(g);
}

StepStats Stepper::step(SimState& state) {
  const GridSpec& g = grid();
  detail::require_same_grid(state.u, params_.phi, "Stepper::step");
  detail::require_same_grid(state.v, params_.phi, "Stepper::step");

  const double dt = params_.dt;
  const double t_mid = state.t + 0.5 * dt;
  const double t_new = static_cast<double>(state.n + 1) * dt;
  const int n = state.u.n();
  const bool dir = !g.periodic();
  const int i_lo = dir ? 1 : 0;
  const int i_hi = dir ? n - 1 : n;

  // Sweep-independent right-hand side: explicit half of the Laplacian, the
  // kinematic terms, and the midpoint forcing.
  laplacian(state.u, lap_);
  zero_boundary(rhs_fix_);
  const double beta_dt = params_.beta / dt;
  for (int j = i_lo; j < i_hi; ++j) {
    for (int i = i_lo; i < i_hi; ++i) {
      double r = beta_dt * state.u(i, j) + coeffs_.c_lap * lap_(i, j) +
                 (2.0 * state.u(i, j) / dt + 2.0 * state.v(i, j)) / dt;
      if (params_.forcing) r += params_.forcing(g.x(i), g.y(j), t_mid);
      rhs_fix_(i, j) = r;
    }
  }

  // Iterate on the full field; Dirichlet rings hold the new-time boundary
  // values so the residual's Laplacian picks up the boundary coupling.
  w_ = state.u;
  if (g.bc == BcKind::dirichlet) set_boundary(w_, boundary_, t_new);

  StepStats stats;
  double prev_d = -1.0;
  bool converged = false;
  for (int m = 1; m <= params_.max_outer; ++m) {
    laplacian(w_, lap_);
    zero_boundary(resid_);
    for (int j = i_lo; j < i_hi; ++j) {
      for (int i = i_lo; i < i_hi; ++i) {
        resid_(i, j) = rhs_fix_(i, j) +
                       params_.phi(i, j) * psi(state.u(i, j), w_(i, j)) -
                       (coeffs_.c0 * w_(i, j) - coeffs_.c_lap * lap_(i, j));
      }
    }
    const double wnorm = norm2(w_);
    delta_.fill(0.0);
    const SolveStats cs =
        cg_solve(coeffs_, resid_, delta_, params_.cg_tol, cg_max_iter_, cg_);
    stats.cg_stats.push_back(cs);
    if (!cs.converged) {
      std::ostringstream msg;
      msg << "inner conjugate-gradient solve stalled at relative residual "
          << cs.final_residual << " after " << cs.iterations << " iterations";
      throw SolverError(msg.str());
    }
    const std::size_t count = w_.size();
    for (std::size_t k = 0; k < count; ++k) w_[k] += delta_[k];
    const double d = norm2(delta_);
    if (prev_d > 0.0) stats.contraction_ratios.push_back(d / prev_d);
    stats.outer_iterations = m;
    if (d <= params_.iter_tol * std::max(1.0, wnorm)) {
      converged = true;
      break;
    }
    prev_d = d;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "outer iteration did not reach iter_tol = " << params_.iter_tol
        << " within " << params_.max_outer << " sweeps";
    throw SolverError(msg.str());
  }

  const std::size_t count = state.u.size();
  for (std::size_t k = 0; k < count; ++k) {
    state.v[k] = 2.0 * (w_[k] - state.u[k]) / dt - state.v[k];
  }
  state.u = w_;
  state.n += 1;
  state.t = static_cast<double>(state.n) * dt;
  return stats;
}

std::pair<SimState, StepStats> step(const SimState& state,
                                    const SchemeParams& params,
                                    const BoundaryData& boundary) {
  Stepper stepper(params, boundary);
  SimState next = state;
  StepStats stats = stepper.step(next);
  return {std::move(next), std::move(stats)};
}

SimState run(const SimState& initial, const SchemeParams& params, double t_end,
             const std::vector<Observer>& observers,
             const BoundaryData& boundary) {
  if (!std::isfinite(t_end)) {
    throw std::invalid_argument("run: t_end must be finite");
  }
  Stepper stepper(params, boundary);
  SimState s = initial;
  const double fuzz = 1e-9 * params.dt;
  while (s.t < t_end - fuzz) {
    StepStats stats = stepper.step(s);
    for (const auto& obs : observers) obs(s, stats);
  }
  return s;
}

}  // namespace sgfd
