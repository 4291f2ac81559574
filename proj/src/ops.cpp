#include "sgfd/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace sgfd {

OperatorCoeffs make_coeffs(double alpha, double beta, double dt) {
  if (!(std::isfinite(alpha) && alpha >= 0.0)) {
    throw std::invalid_argument("make_coeffs: alpha must be finite and >= 0");
  }
  if (!(std::isfinite(beta) && beta >= 0.0)) {
    throw std::invalid_argument("make_coeffs: beta must be finite and >= 0");
  }
  if (!(std::isfinite(dt) && dt > 0.0)) {
    throw std::invalid_argument("make_coeffs: dt must be finite and > 0");
  }
  return {2.0 / (dt * dt) + beta / dt, 0.5 * alpha};
}

void laplacian(const Field& f, Field& out) {
  detail::require_same_grid(f, out, "laplacian");
  const GridSpec& g = f.grid();
  const int n = f.n();
  const double inv_h2 = 1.0 / (g.spacing * g.spacing);
  if (g.periodic()) {
    for (int j = 0; j < n; ++j) {
      const int jm = (j == 0) ? n - 1 : j - 1;
      const int jp = (j == n - 1) ? 0 : j + 1;
      for (int i = 0; i < n; ++i) {
        const int im = (i == 0) ? n - 1 : i - 1;
        const int ip = (i == n - 1) ? 0 : i + 1;
        out(i, j) = ((f(im, j) + f(ip, j)) + (f(i, jm) + f(i, jp)) -
                     4.0 * f(i, j)) * inv_h2;
      }
    }
  } else {
    zero_boundary(out);
    for (int j = 1; j < n - 1; ++j) {
      for (int i = 1; i < n - 1; ++i) {
        out(i, j) = ((f(i - 1, j) + f(i + 1, j)) + (f(i, j - 1) + f(i, j + 1)) -
                     4.0 * f(i, j)) * inv_h2;
      }
    }
  }
}

Field laplacian(const Field& f) {
  Field out(f.grid());
  laplacian(f, out);
  return out;
}

double inner(const Field& f, const Field& g) {
  detail::require_same_grid(f, g, "inner");
  double s = 0.0;
  const std::size_t count = f.size();
  for (std::size_t k = 0; k < count; ++k) s += f[k] * g[k];
  const double h = f.grid().spacing;
  return h * h * s;
}

double norm2(const Field& f) { return std::sqrt(inner(f, f)); }

double grad_inner(const Field& f, const Field& g) {
  detail::require_same_grid(f, g, "grad_inner");
  const int n = f.n();
  double s = 0.0;
  if (f.grid().periodic()) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const int ip = (i == n - 1) ? 0 : i + 1;
        s += (f(ip, j) - f(i, j)) * (g(ip, j) - g(i, j));
      }
    }
    for (int j = 0; j < n; ++j) {
      const int jp = (j == n - 1) ? 0 : j + 1;
      for (int i = 0; i < n; ++i) {
        s += (f(i, jp) - f(i, j)) * (g(i, jp) - g(i, j));
      }
    }
  } else {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i + 1 < n; ++i) {
        s += (f(i + 1, j) - f(i, j)) * (g(i + 1, j) - g(i, j));
      }
    }
    for (int j = 0; j + 1 < n; ++j) {
      for (int i = 0; i < n; ++i) {
        s += (f(i, j + 1) - f(i, j)) * (g(i, j + 1) - g(i, j));
      }
    }
  }
  return s;
}

double grad_norm2_sq(const Field& f) { return grad_inner(f, f); }

void apply_A(const OperatorCoeffs& c, const Field& f, Field& out) {
  detail::require_same_grid(f, out, "apply_A");
  if (!(std::isfinite(c.c0) && c.c0 > 0.0 && std::isfinite(c.c_lap) &&
        c.c_lap >= 0.0)) {
    throw std::invalid_argument("apply_A: ill-posed coefficients");
  }
  const GridSpec& g = f.grid();
  const int n = f.n();
  const double inv_h2 = 1.0 / (g.spacing * g.spacing);
  if (g.periodic()) {
    for (int j = 0; j < n; ++j) {
      const int jm = (j == 0) ? n - 1 : j - 1;
      const int jp = (j == n - 1) ? 0 : j + 1;
      for (int i = 0; i < n; ++i) {
        const int im = (i == 0) ? n - 1 : i - 1;
        const int ip = (i == n - 1) ? 0 : i + 1;
        const double lap = ((f(im, j) + f(ip, j)) + (f(i, jm) + f(i, jp)) -
                            4.0 * f(i, j)) * inv_h2;
        out(i, j) = c.c0 * f(i, j) - c.c_lap * lap;
      }
    }
  } else {
    zero_boundary(out);
    for (int j = 1; j < n - 1; ++j) {
      for (int i = 1; i < n - 1; ++i) {
        const double lap = ((f(i - 1, j) + f(i + 1, j)) +
                            (f(i, j - 1) + f(i, j + 1)) - 4.0 * f(i, j)) *
                           inv_h2;
        out(i, j) = c.c0 * f(i, j) - c.c_lap * lap;
      }
    }
  }
}

void zero_boundary(Field& f) {
  if (f.grid().periodic()) return;
  const int n = f.n();
  for (int i = 0; i < n; ++i) {
    f(i, 0) = 0.0;
    f(i, n - 1) = 0.0;
  }
  for (int j = 1; j < n - 1; ++j) {
    f(0, j) = 0.0;
    f(n - 1, j) = 0.0;
  }
}

}  // namespace sgfd
