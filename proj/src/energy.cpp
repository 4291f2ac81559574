#include "sgfd/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "sgfd/ops.hpp"

namespace sgfd {

EnergySample discrete_energy(const SimState& state,
                             const SchemeParams& params) {
  detail::require_same_grid(state.u, state.v, "discrete_energy");
  detail::require_same_grid(state.u, params.phi, "discrete_energy");
  EnergySample e;
  e.n = state.n;
  e.t = state.t;
  e.kinetic = 0.5 * inner(state.v, state.v);
  e.gradient = 0.5 * params.alpha * grad_norm2_sq(state.u);
  double pot = 0.0;
  const std::size_t count = state.u.size();
  for (std::size_t k = 0; k < count; ++k) {
    pot += params.phi[k] * (1.0 - std::cos(state.u[k]));
  }
  const double h = state.u.grid().spacing;
  e.potential = h * h * pot;
  e.total = e.kinetic + e.gradient + e.potential;
  return e;
}

std::pair<double, double> energy_drift(
    const std::vector<EnergySample>& series) {
  if (series.empty()) throw std::invalid_argument("energy_drift: empty series");
  const double e0 = series.front().total;
  double max_abs = 0.0;
  for (const auto& s : series) {
    max_abs = std::max(max_abs, std::fabs(s.total - e0));
  }
  return {max_abs, max_abs / std::max(1.0, std::fabs(e0))};
}

bool conserving_setup(const GridSpec& grid, const SchemeParams& params) {
  return params.beta == 0.0 && !params.forcing &&
         grid.bc != BcKind::dirichlet;
}

}  // namespace sgfd
