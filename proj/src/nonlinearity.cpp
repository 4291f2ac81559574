#include "sgfd/nonlinearity.hpp"

namespace sgfd {

void psi_field(const Field& u_new, const Field& u_old, const Field& phi,
               Field& out) {
  detail::require_same_grid(u_new, u_old, "psi_field");
  detail::require_same_grid(u_new, phi, "psi_field");
  detail::require_same_grid(u_new, out, "psi_field");
  const std::size_t count = u_new.size();
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = phi[k] * psi(u_old[k], u_new[k]);
  }
}

Field psi_field(const Field& u_new, const Field& u_old, const Field& phi) {
  Field out(u_new.grid());
  psi_field(u_new, u_old, phi, out);
  return out;
}

}  // namespace sgfd
