#include "sgfd/cg.hpp"

#include <cmath>
#include <stdexcept>

#include "sgfd/errors.hpp"

namespace sgfd {

namespace {

// Plain Euclidean dot product in fixed index order; the h^2 quadrature weight
// cancels from every ratio CG forms, so it is omitted here.
double dot(const Field& a, const Field& b) {
  double s = 0.0;
  const std::size_t count = a.size();
  for (std::size_t k = 0; k < count; ++k) s += a[k] * b[k];
  return s;
}

void ensure(const Field& like, Field& f) {
  if (!(f.grid() == like.grid())) f = Field(like.grid());
}

}  // namespace

SolveStats cg_solve(const OperatorCoeffs& c, const Field& rhs, Field& x,
                    double tol, int max_iter, CgScratch& s) {
  detail::require_same_grid(rhs, x, "cg_solve");
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw std::invalid_argument("cg_solve: tol must be finite and > 0");
  }
  if (max_iter < 0) throw std::invalid_argument("cg_solve: max_iter < 0");
  ensure(rhs, s.b);
  ensure(rhs, s.r);
  ensure(rhs, s.p);
  ensure(rhs, s.Ap);

  // Clean copies with zeroed Dirichlet rings keep every vector in the
  // unknown-set subspace, so whole-array updates below stay consistent.
  s.b = rhs;
  zero_boundary(s.b);
  zero_boundary(x);

  const std::size_t count = rhs.size();
  const double bnorm2 = dot(s.b, s.b);
  if (!std::isfinite(bnorm2)) throw SolverError("cg_solve: non-finite rhs");
  if (bnorm2 == 0.0) {
    x.fill(0.0);
    return {0, 0.0, true};
  }
  const double bnorm = std::sqrt(bnorm2);

  apply_A(c, x, s.Ap);
  for (std::size_t k = 0; k < count; ++k) s.r[k] = s.b[k] - s.Ap[k];
  double rr = dot(s.r, s.r);
  if (!std::isfinite(rr)) throw SolverError("cg_solve: non-finite residual");
  if (std::sqrt(rr) <= tol * bnorm) {
    return {0, std::sqrt(rr) / bnorm, true};
  }
  s.p = s.r;

  for (int it = 1; it <= max_iter; ++it) {
    apply_A(c, s.p, s.Ap);
    const double pAp = dot(s.p, s.Ap);
    if (!std::isfinite(pAp) || pAp <= 0.0) {
      throw SolverError("cg_solve: operator lost positive definiteness");
    }
    const double alpha = rr / pAp;
    for (std::size_t k = 0; k < count; ++k) x[k] += alpha * s.p[k];
    for (std::size_t k = 0; k < count; ++k) s.r[k] -= alpha * s.Ap[k];
    const double rr_new = dot(s.r, s.r);
    if (!std::isfinite(rr_new)) {
      throw SolverError("cg_solve: non-finite residual");
    }
    if (std::sqrt(rr_new) <= tol * bnorm) {
      return {it, std::sqrt(rr_new) / bnorm, true};
    }
    const double beta = rr_new / rr;
    for (std::size_t k = 0; k < count; ++k) s.p[k] = s.r[k] + beta * s.p[k];
    rr = rr_new;
  }
  return {max_iter, std::sqrt(rr) / bnorm, false};
}

std::pair<Field, SolveStats> cg_solve(const OperatorCoeffs& c,
                                      const Field& rhs, const Field& x0,
                                      double tol, int max_iter) {
  Field x = x0;
  CgScratch scratch;
  SolveStats stats = cg_solve(c, rhs, x, tol, max_iter, scratch);
  return {std::move(x), stats};
}

}  // namespace sgfd
