#include "sgfd/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sgfd {

GridSpec make_grid(double x_min, double x_max, double y_min, double y_max,
                   int cells, BcKind bc) {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
        std::isfinite(y_max))) {
    throw std::invalid_argument("make_grid: non-finite domain bounds");
  }
  if (!(x_max > x_min) || !(y_max > y_min)) {
    throw std::invalid_argument("make_grid: empty domain");
  }
  if (x_max - x_min != y_max - y_min) {
    throw std::invalid_argument("make_grid: domain must be square");
  }
  if (cells < 2) {
    throw std::invalid_argument("make_grid: need at least 2 cells per axis");
  }
  GridSpec g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.cells = cells;
  g.spacing = (x_max - x_min) / cells;
  g.bc = bc;
  return g;
}

Field sample(const GridSpec& grid,
             const std::function<double(double, double)>& f) {
  if (!f) throw std::invalid_argument("sample: null function");
  Field out(grid);
  const int n = out.n();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = f(grid.x(i), grid.y(j));
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "sample: non-finite value at (" << grid.x(i) << ", "
            << grid.y(j) << ")";
        throw std::invalid_argument(msg.str());
      }
      out(i, j) = v;
    }
  }
  return out;
}

void set_boundary(Field& f, const BoundaryData& bd, double t) {
  const GridSpec& g = f.grid();
  if (g.periodic()) {
    throw std::invalid_argument("set_boundary: periodic grids have no boundary");
  }
  if (!bd) throw std::invalid_argument("set_boundary: null boundary function");
  const int n = f.n();
  for (int i = 0; i < n; ++i) {
    f(i, 0) = bd.g(g.x(i), g.y(0), t);
    f(i, n - 1) = bd.g(g.x(i), g.y(n - 1), t);
  }
  for (int j = 1; j < n - 1; ++j) {
    f(0, j) = bd.g(g.x(0), g.y(j), t);
    f(n - 1, j) = bd.g(g.x(n - 1), g.y(j), t);
  }
}

namespace detail {

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument(std::string(where) + ": grid mismatch");
  }
}

}  // namespace detail

}  // namespace sgfd
