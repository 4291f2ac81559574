#pragma once

#include <utility>

#include "sgfd/ops.hpp"

namespace sgfd {

struct SolveStats {
  int iterations = 0;
  double final_residual = 0.0;  // relative to |rhs|_2
  bool converged = false;
};

// Reusable vectors so repeated solves stay allocation-free.
struct CgScratch {
  Field b, r, p, Ap;
};

// Unpreconditioned conjugate gradients on A x = rhs with A = c0*I -
// c_lap*lap_h, matrix-free. Stops when |rhs - A x|_2 <= tol * |rhs|_2.
// Dirichlet-kind boundary entries of x are pinned to zero (boundary data is
// the caller's to fold into rhs); rhs boundary entries are ignored. All
// reductions accumulate in fixed index order, so identical inputs give
// bitwise-identical output. Throws SolverError on non-finite values or loss
// of positive definiteness; converged = false merely means max_iter ran out.
//
// x carries the initial guess on entry and the solution on exit.
SolveStats cg_solve(const OperatorCoeffs& c, const Field& rhs, Field& x,
                    double tol, int max_iter, CgScratch& scratch);

// Convenience overload with its own scratch.
std::pair<Field, SolveStats> cg_solve(const OperatorCoeffs& c,
                                      const Field& rhs, const Field& x0,
                                      double tol, int max_iter);

}  // namespace sgfd
