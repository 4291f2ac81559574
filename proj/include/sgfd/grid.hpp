#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sgfd {

enum class BcKind { dirichlet, homogeneous_dirichlet, periodic };

// Uniform square grid on [x_min, x_max] x [y_min, y_max] with `cells` (= M)
// subdivisions per axis, so spacing h = (x_max - x_min) / M.
//
// Node sets: the Dirichlet kinds carry (M+1)^2 nodes including the boundary
// ring; periodic grids carry M^2 nodes with index wraparound (the duplicate
// seam row/column is dropped). Node (i, j) sits at (x_min + i h, y_min + j h).
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int cells = 0;
  double spacing = 0.0;
  BcKind bc = BcKind::homogeneous_dirichlet;

  bool periodic() const { return bc == BcKind::periodic; }
  int nodes_per_axis() const { return periodic() ? cells : cells + 1; }
  std::size_t node_count() const {
    auto n = static_cast<std::size_t>(nodes_per_axis());
    return n * n;
  }
  double x(int i) const { return x_min + i * spacing; }
  double y(int j) const { return y_min + j * spacing; }

  bool operator==(const GridSpec&) const = default;
};

// Validates the domain (finite, non-empty, square) and cells >= 2.
GridSpec make_grid(double x_min, double x_max, double y_min, double y_max,
                   int cells, BcKind bc);

// Scalar field of node values, row-major with i (the x index) fastest.
class Field {
 public:
  Field() = default;
  explicit Field(const GridSpec& grid)
      : grid_(grid), n_(grid.nodes_per_axis()),
        data_(grid.node_count(), 0.0) {}

  const GridSpec& grid() const { return grid_; }
  int n() const { return n_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * n_ + i;
  }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  double& operator[](std::size_t k) { return data_[k]; }
  double operator[](std::size_t k) const { return data_[k]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  void fill(double c) { data_.assign(data_.size(), c); }

  bool operator==(const Field&) const = default;

 private:
  GridSpec grid_{};
  int n_ = 0;
  std::vector<double> data_;
};

// Dirichlet boundary values g(x, y, t) on the boundary ring.
struct BoundaryData {
  std::function<double(double, double, double)> g;
  explicit operator bool() const { return static_cast<bool>(g); }
};

// Evaluates f(x, y) at every node. Errors if f returns a non-finite value.
Field sample(const GridSpec& grid,
             const std::function<double(double, double)>& f);

// Overwrites the boundary ring with g(x, y, t); interior untouched.
// Errors on periodic grids, which have no boundary nodes.
void set_boundary(Field& f, const BoundaryData& bd, double t);

namespace detail {
// Errors unless both fields live on the same grid; `where` names the caller.
void require_same_grid(const Field& a, const Field& b, const char* where);
}  // namespace detail

}  // namespace sgfd
