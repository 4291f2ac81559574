#include "sgfd/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgfd {

namespace {
constexpr double kPi = std::numbers::pi;
}

Scenario manufactured() {
  Scenario sc;
  sc.name = "manufactured";
  sc.x_min = sc.y_min = -0.5;
  sc.x_max = sc.y_max = 0.5;
  sc.bc = BcKind::dirichlet;
  sc.alpha = 1.0 / (2.0 * kPi * kPi);
  sc.beta = 0.0;
  sc.phi = [](double, double) { return 1.0; };
  sc.exact_u = [](double x, double y, double t) {
    return std::cos(kPi * x) * std::cos(kPi * y) * std::cos(t);
  };
  sc.exact_v = [](double x, double y, double t) {
    return -std::cos(kPi * x) * std::cos(kPi * y) * std::sin(t);
  };
  // u_tt = -u and -alpha lap u = u cancel, so the source reduces to sin(u).
  sc.forcing = [](double x, double y, double t) {
    return std::sin(std::cos(kPi * x) * std::cos(kPi * y) * std::cos(t));
  };
  sc.initial_u = [](double x, double y) {
    return std::cos(kPi * x) * std::cos(kPi * y);
  };
  sc.initial_v = [](double, double) { return 0.0; };
  // The exact solution vanishes on the boundary ring at all times.
  sc.boundary = BoundaryData{[](double, double, double) { return 0.0; }};
  sc.default_dt = 0.1;
  sc.default_t_end = 5.0;
  sc.default_cells = 20;
  return sc;
}

Scenario energy_test() {
  Scenario sc;
  sc.name = "energy";
  sc.x_min = sc.y_min = 0.0;
  sc.x_max = sc.y_max = 1.0;
  sc.bc = BcKind::homogeneous_dirichlet;
  sc.alpha = 1.0;
  sc.beta = 0.0;
  sc.phi = [](double, double) { return 1.0; };
  sc.initial_u = [](double x, double y) {
    return std::sin(2.0 * kPi * x) * std::sin(2.0 * kPi * y);
  };
  sc.initial_v = [](double, double) { return 0.0; };
  sc.default_dt = 0.001;
  sc.default_t_end = 1.0;
  sc.default_cells = 40;
  return sc;
}

Scenario ring_soliton() {
  Scenario sc;
  sc.name = "soliton";
  sc.x_min = sc.y_min = -4.0;
  sc.x_max = sc.y_max = 4.0;
  sc.bc = BcKind::periodic;
  sc.alpha = 1.0;
  sc.beta = 0.0;
  sc.phi = [](double, double) { return 1.0; };
  sc.initial_u = [](double x, double y) {
    return 2.0 * std::atan(std::exp(3.0 - 5.0 * std::sqrt(x * x + y * y)));
  };
  sc.initial_v = [](double, double) { return 0.0; };
  sc.display = [](double u) { return std::sin(0.5 * u); };
  sc.default_dt = 0.1;
  sc.default_t_end = 50.0;
  sc.default_cells = 80;
  return sc;
}

Scenario scenario_by_name(const std::string& key) {
  if (key == "manufactured") return manufactured();
  if (key == "energy") return energy_test();
  if (key == "soliton") return ring_soliton();
  throw std::invalid_argument(
      "unknown scenario '" + key +
      "' (expected manufactured, energy, or soliton)");
}

GridSpec scenario_grid(const Scenario& sc, int cells) {
  return make_grid(sc.x_min, sc.x_max, sc.y_min, sc.y_max, cells, sc.bc);
}

SchemeParams scenario_params(const Scenario& sc, const GridSpec& grid,
                             double dt) {
  SchemeParams p;
  p.alpha = sc.alpha;
  p.beta = sc.beta;
  p.dt = dt;
  p.phi = sample(grid, sc.phi);
  p.forcing = sc.forcing;
  return p;
}

SimState initial_state(const Scenario& sc, const GridSpec& grid) {
  SimState s;
  s.u = sample(grid, sc.initial_u);
  s.v = sample(grid, sc.initial_v);
  s.n = 0;
  s.t = 0.0;
  return s;
}

}  // namespace sgfd
