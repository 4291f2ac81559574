#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgfd/io.hpp"

using namespace sgfd;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  const fs::path p = fs::temp_directory_path() / "sgfd_io_tests";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("energy CSV with no rows is a bare header and reads back empty") {
  const fs::path p = tmp_dir() / "empty_energy.csv";
  write_energy_csv(p.string(), {});
  CHECK(slurp(p) == "n,t,kinetic,gradient,potential,total\n");
  CHECK(read_energy_csv(p.string()).empty());
}

TEST_CASE("energy CSV round-trips every double bit for bit") {
  std::vector<EnergySample> series;
  series.push_back({0, 0.0, 1.0 / 3.0, 1e-17, std::numbers::pi, 6.02214076e23});
  series.push_back({123456789, 0.1, -2.718281828459045, -0.0,
                    5e-324, 9.968601944787212});
  const fs::path p = tmp_dir() / "roundtrip_energy.csv";
  write_energy_csv(p.string(), series);
  const std::vector<EnergySample> got = read_energy_csv(p.string());
  REQUIRE(got.size() == series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    CHECK(got[k].n == series[k].n);
    CHECK(got[k].t == series[k].t);
    CHECK(got[k].kinetic == series[k].kinetic);
    CHECK(got[k].gradient == series[k].gradient);
    CHECK(got[k].potential == series[k].potential);
    CHECK(got[k].total == series[k].total);
  }
  // -0.0 compares equal to 0.0, so pin its sign separately.
  CHECK(std::signbit(got[1].gradient));
  // Denormals survive the 17-significant-digit rendering too.
  CHECK(got[1].potential == 5e-324);

  // Rendering is deterministic: a second write produces identical bytes.
  const fs::path q = tmp_dir() / "roundtrip_energy_again.csv";
  write_energy_csv(q.string(), series);
  CHECK(slurp(p) == slurp(q));
}

TEST_CASE("energy CSV rows render as fixed-width scientific cells") {
  std::vector<EnergySample> series;
  series.push_back({3, 0.5, 1.0, 0.25, 0.0, 1.25});
  const fs::path p = tmp_dir() / "exact_energy.csv";
  write_energy_csv(p.string(), series);
  CHECK(slurp(p) ==
        "n,t,kinetic,gradient,potential,total\n"
        "3,5.0000000000000000e-01,1.0000000000000000e+00,"
        "2.5000000000000000e-01,0.0000000000000000e+00,"
        "1.2500000000000000e+00\n");
}

TEST_CASE("energy CSV reader rejects malformed input") {
  const fs::path dir = tmp_dir();

  const fs::path bad_header = dir / "bad_header.csv";
  std::ofstream(bad_header) << "time,energy\n";
  CHECK_THROWS_AS(read_energy_csv(bad_header.string()), std::runtime_error);

  const fs::path short_row = dir / "short_row.csv";
  std::ofstream(short_row) << "n,t,kinetic,gradient,potential,total\n0,1.0\n";
  CHECK_THROWS_AS(read_energy_csv(short_row.string()), std::runtime_error);

  const fs::path bad_cell = dir / "bad_cell.csv";
  std::ofstream(bad_cell)
      << "n,t,kinetic,gradient,potential,total\n0,1.0,abc,0,0,0\n";
  CHECK_THROWS_AS(read_energy_csv(bad_cell.string()), std::runtime_error);

  CHECK_THROWS_AS(read_energy_csv((dir / "does_not_exist.csv").string()),
                  std::runtime_error);
}

TEST_CASE("error CSV leaves order cells empty where no coarser level exists") {
  ConvergenceRow lvl0;
  lvl0.level = 0;
  lvl0.dt = 0.25;
  lvl0.h = 0.5;
  lvl0.checkpoints.push_back({{1.0, 0.03125, 0.0625, 0.125}, {}, {}});
  ConvergenceRow lvl1;
  lvl1.level = 1;
  lvl1.dt = 0.125;
  lvl1.h = 0.25;
  lvl1.checkpoints.push_back({{1.0, 0.0078125, 0.015625, 0.03125}, 2.0, 2.0});

  const fs::path p = tmp_dir() / "errors.csv";
  write_error_csv(p.string(), {lvl0, lvl1});
  CHECK(slurp(p) ==
        "level,dt,h,t,err_u,err_v,err_grad_u,order_u,order_v\n"
        "0,2.5000000000000000e-01,5.0000000000000000e-01,"
        "1.0000000000000000e+00,3.1250000000000000e-02,"
        "6.2500000000000000e-02,1.2500000000000000e-01,,\n"
        "1,1.2500000000000000e-01,2.5000000000000000e-01,"
        "1.0000000000000000e+00,7.8125000000000000e-03,"
        "1.5625000000000000e-02,3.1250000000000000e-02,"
        "2.0000000000000000e+00,2.0000000000000000e+00\n");
}

TEST_CASE("VTK snapshot is a legacy structured-points file, i fastest") {
  const GridSpec g =
      make_grid(0.0, 1.0, 0.0, 1.0, 2, BcKind::homogeneous_dirichlet);
  Field f(g);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = static_cast<double>(k);

  const fs::path p = tmp_dir() / "snap.vtk";
  write_vtk_snapshot(p.string(), f, 0.25);

  std::string expect =
      "# vtk DataFile Version 3.0\n"
      "sine-Gordon field snapshot t=2.5000000000000000e-01\n"
      "ASCII\n"
      "DATASET STRUCTURED_POINTS\n"
      "DIMENSIONS 3 3 1\n"
      "ORIGIN 0.0000000000000000e+00 0.0000000000000000e+00 0\n"
      "SPACING 5.0000000000000000e-01 5.0000000000000000e-01 1\n"
      "POINT_DATA 9\n"
      "SCALARS u double 1\n"
      "LOOKUP_TABLE default\n";
  for (int k = 0; k < 9; ++k) {
    expect += std::to_string(k) + ".0000000000000000e+00\n";
  }
  CHECK(slurp(p) == expect);
}

TEST_CASE("writers report unwritable paths") {
  const std::string bad =
      (tmp_dir() / "no_such_subdir" / "out.csv").string();
  CHECK_THROWS_AS(write_energy_csv(bad, {}), std::runtime_error);
  CHECK_THROWS_AS(write_error_csv(bad, {}), std::runtime_error);
  const GridSpec g =
      make_grid(0.0, 1.0, 0.0, 1.0, 2, BcKind::homogeneous_dirichlet);
  CHECK_THROWS_AS(write_vtk_snapshot(bad, Field(g), 0.0), std::runtime_error);
}

TEST_CASE("transformed applies the map node-wise and defaults to identity") {
  const GridSpec g = make_grid(0.0, 1.0, 0.0, 1.0, 3, BcKind::periodic);
  Field f(g);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = 0.3 * static_cast<double>(k);

  const Field same = transformed(f, nullptr);
  CHECK(same == f);

  const Field mapped = transformed(f, [](double u) { return std::sin(0.5 * u); });
  REQUIRE(mapped.size() == f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    CHECK(mapped[k] == std::sin(0.5 * f[k]));
  }
}
