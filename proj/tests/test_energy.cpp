#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sgfd/energy.hpp"
#include "sgfd/scenarios.hpp"

using namespace sgfd;

namespace {

SimState state_on(const GridSpec& g, double u_val, double v_val) {
  SimState s;
  s.u = Field(g);
  s.v = Field(g);
  s.u.fill(u_val);
  s.v.fill(v_val);
  return s;
}

SchemeParams unit_params(const GridSpec& g, double alpha, double dt) {
  SchemeParams p;
  p.alpha = alpha;
  p.dt = dt;
  p.phi = sample(g, [](double, double) { return 1.0; });
  return p;
}

}  // namespace

TEST_CASE("energy of the zero state vanishes") {
  const GridSpec g = make_grid(0.0, 1.0, 0.0, 1.0, 4, BcKind::homogeneous_dirichlet);
  const EnergySample e = discrete_energy(state_on(g, 0.0, 0.0),
                                         unit_params(g, 1.0, 0.1));
  CHECK(e.kinetic == 0.0);
  CHECK(e.gradient == 0.0);
  CHECK(e.potential == 0.0);
  CHECK(e.total == 0.0);
}

TEST_CASE("energy components have the expected quadrature weights") {
  const GridSpec g = make_grid(0.0, 1.0, 0.0, 1.0, 4, BcKind::homogeneous_dirichlet);

  SUBCASE("pure kinetic: v = 1 over 25 nodes") {
    const EnergySample e = discrete_energy(state_on(g, 0.0, 1.0),
                                           unit_params(g, 1.0, 0.1));
    CHECK(e.kinetic == doctest::Approx(0.78125).epsilon(1e-15));  // h^2 25 / 2
    CHECK(e.gradient == 0.0);
    CHECK(e.potential == 0.0);
    CHECK(e.total == e.kinetic);
  }

  SUBCASE("pure potential: u = pi doubles 1 - cos") {
    const double pi = std::acos(-1.0);
    const EnergySample e = discrete_energy(state_on(g, pi, 0.0),
                                           unit_params(g, 1.0, 0.1));
    CHECK(e.kinetic == 0.0);
    CHECK(e.gradient == 0.0);  // constant field
    CHECK(e.potential == doctest::Approx(3.125).epsilon(1e-14));  // h^2 25 2
  }

  SUBCASE("n and t are carried through") {
    SimState s = state_on(g, 0.0, 0.0);
    s.n = 7;
    s.t = 0.7;
    const EnergySample e = discrete_energy(s, unit_params(g, 1.0, 0.1));
    CHECK(e.n == 7);
    CHECK(e.t == 0.7);
  }
}

TEST_CASE("initial membrane energy matches the frozen reference") {
  // Frozen from an independent high-precision quadrature of the same data.
  const Scenario sc = energy_test();
  const GridSpec g = scenario_grid(sc, 40);
  const SchemeParams p = scenario_params(sc, g, 0.001);
  const EnergySample e = discrete_energy(initial_state(sc, g), p);
  CHECK(e.kinetic == 0.0);
  CHECK(std::fabs(e.gradient - 9.84932752388982) <= 1e-10);
  CHECK(std::fabs(e.potential - 0.11927442089739151) <= 1e-12);
  CHECK(std::fabs(e.total - 9.968601944787212) <= 1e-10);
  CHECK(e.total > 9.8);
  CHECK(e.total < 10.2);
}

TEST_CASE("energy_drift reports absolute and normalized spread") {
  auto series_of = [](std::initializer_list<double> totals) {
    std::vector<EnergySample> s;
    for (double t : totals) {
      EnergySample e;
      e.total = t;
      s.push_back(e);
    }
    return s;
  };

  const auto [abs1, rel1] = energy_drift(series_of({10.0, 10.1, 9.95}));
  CHECK(abs1 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(rel1 == doctest::Approx(0.01).epsilon(1e-12));

  // Normalization clamps at 1 for small energies.
  const auto [abs2, rel2] = energy_drift(series_of({0.5, 0.6}));
  CHECK(abs2 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(rel2 == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(energy_drift({}), std::invalid_argument);
}

TEST_CASE("undamped force-free evolution conserves the energy") {
  const Scenario sc = energy_test();
  const GridSpec g = scenario_grid(sc, 16);
  SchemeParams p = scenario_params(sc, g, 0.01);
  REQUIRE(conserving_setup(g, p));

  std::vector<EnergySample> series;
  SimState state = initial_state(sc, g);
  series.push_back(discrete_energy(state, p));
  Stepper stepper(p);
  for (int n = 0; n < 100; ++n) {
    stepper.step(state);
    series.push_back(discrete_energy(state, p));
  }
  const auto [abs_drift, rel_drift] = energy_drift(series);
  CHECK(rel_drift <= 1e-10);
  // The exchange between forms is real even though the total is frozen.
  double min_kin = series.front().kinetic, max_kin = min_kin;
  for (const auto& e : series) {
    min_kin = std::min(min_kin, e.kinetic);
    max_kin = std::max(max_kin, e.kinetic);
  }
  CHECK(max_kin - min_kin > 1.0);
}

TEST_CASE("damping makes the energy decay monotonically") {
  const Scenario sc = energy_test();
  const GridSpec g = scenario_grid(sc, 16);
  SchemeParams p = scenario_params(sc, g, 0.05);
  p.beta = 0.5;
  REQUIRE_FALSE(conserving_setup(g, p));

  SimState state = initial_state(sc, g);
  Stepper stepper(p);
  double prev = discrete_energy(state, p).total;
  const double e0 = prev;
  for (int n = 0; n < 50; ++n) {
    stepper.step(state);
    const double e = discrete_energy(state, p).total;
    CHECK(e <= prev + 1e-10);
    prev = e;
  }
  CHECK(prev < 0.99 * e0);
}

TEST_CASE("conserving_setup spots each broken hypothesis") {
  const Scenario sc = energy_test();
  const GridSpec g = scenario_grid(sc, 8);
  SchemeParams p = scenario_params(sc, g, 0.01);
  CHECK(conserving_setup(g, p));

  SchemeParams damped = p;
  damped.beta = 0.1;
  CHECK_FALSE(conserving_setup(g, damped));

  SchemeParams forced = p;
  forced.forcing = [](double, double, double) { return 1.0; };
  CHECK_FALSE(conserving_setup(g, forced));

  const GridSpec lifted = make_grid(0.0, 1.0, 0.0, 1.0, 8, BcKind::dirichlet);
  CHECK_FALSE(conserving_setup(lifted, p));

  const GridSpec wrap = make_grid(0.0, 1.0, 0.0, 1.0, 8, BcKind::periodic);
  CHECK(conserving_setup(wrap, p));
}

TEST_CASE("discrete_energy validates grids") {
  const GridSpec a = make_grid(0.0, 1.0, 0.0, 1.0, 4, BcKind::homogeneous_dirichlet);
  const GridSpec b = make_grid(0.0, 1.0, 0.0, 1.0, 5, BcKind::homogeneous_dirichlet);
  SimState s = state_on(a, 0.0, 0.0);
  CHECK_THROWS_AS(discrete_energy(s, unit_params(b, 1.0, 0.1)),
                  std::invalid_argument);
}
