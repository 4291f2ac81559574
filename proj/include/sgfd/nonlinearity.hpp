#pragma once

#include <cmath>

#include "sgfd/grid.hpp"

namespace sgfd {

// The cosine difference quotient (cos b - cos a) / (b - a), continued by
// -sin(a) on the diagonal. Evaluated in the cancellation-free product form
//
//   psi(a, b) = -sin((a+b)/2) * sinc((b-a)/2),   sinc(x) = sin(x)/x,
//
// with a two-term Taylor series for sinc below |x| = 1e-4, where the
// truncation error d^4/120 < 1e-17 is under one ulp. sinc is evaluated at
// |x|, so swapping a and b reproduces the identical floating-point value.
//
// Properties relied on elsewhere: |psi| <= 1, psi(a, b) = psi(b, a),
// |psi(a, b) + sin((a+b)/2)| <= (b-a)^2 / 24, and Lipschitz continuity
// |psi(a, b1) - psi(a, b2)| <= |b1 - b2|.
inline double psi(double a, double b) {
  const double mid = 0.5 * (a + b);
  const double d = std::fabs(0.5 * (b - a));
  const double s = (d < 1e-4) ? 1.0 - d * d / 6.0 : std::sin(d) / d;
  return -std::sin(mid) * s;
}

// out_ij = phi_ij * psi(u_old_ij, u_new_ij): the lagged nonlinear term of the
// implicit update.
void psi_field(const Field& u_new, const Field& u_old, const Field& phi,
               Field& out);
Field psi_field(const Field& u_new, const Field& u_old, const Field& phi);

}  // namespace sgfd
