#pragma once

#include "sgfd/grid.hpp"

namespace sgfd {

// Coefficients of the implicit operator A = c0*I - c_lap*lap_h applied every
// sweep: c0 = 2/dt^2 + beta/dt, c_lap = alpha/2. A is symmetric positive
// definite on the unknown set (interior nodes for Dirichlet grids, all nodes
// for periodic ones).
struct OperatorCoeffs {
  double c0 = 0.0;
  double c_lap = 0.0;
};

// Validates dt > 0, alpha >= 0, beta >= 0 (all finite).
OperatorCoeffs make_coeffs(double alpha, double beta, double dt);

// Five-point Laplacian. Dirichlet kinds: interior nodes only, reading the
// field's boundary entries as given; output boundary entries are 0. Periodic:
// all nodes with wraparound. The stencil sums the x pair and the y pair
// before combining, so the output commutes bit-for-bit with x<->y transposes
// of symmetric inputs.
void laplacian(const Field& f, Field& out);
Field laplacian(const Field& f);

// Discrete L2 inner product <f, g> = h^2 sum_ij f_ij g_ij over the full node
// set, accumulated in fixed index order for reproducibility.
double inner(const Field& f, const Field& g);

// sqrt(<f, f>).
double norm2(const Field& f);

// Squared forward-difference gradient norm |D_x f|^2 + |D_y f|^2 with the
// h^2 quadrature weight (each term reduces to the plain squared node
// difference). Dirichlet kinds difference over i = 0..M-1 within each row
// (and symmetrically in y); periodic differences wrap. Summation by parts
// <lap_h f, g> = -(gradient pairing) holds exactly for homogeneous or
// periodic data.
double grad_norm2_sq(const Field& f);

// The gradient pairing sum_edges D_x f D_x g + D_y f D_y g matching
// grad_norm2_sq(f) == grad_inner(f, f).
double grad_inner(const Field& f, const Field& g);

// out = c0*f - c_lap*lap_h(f) on the unknown set; Dirichlet output boundary
// entries are 0 (callers fold boundary data into the right-hand side).
void apply_A(const OperatorCoeffs& c, const Field& f, Field& out);

// Zeroes the boundary ring of a Dirichlet-kind field; no-op on periodic.
void zero_boundary(Field& f);

}  // namespace sgfd
