#include "sgfd/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sgfd {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_real(const std::string& s, const std::string& path) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw std::runtime_error("malformed numeric cell '" + s + "' in " + path);
  }
  return v;
}

}  // namespace

void write_energy_csv(const std::string& path,
                      const std::vector<EnergySample>& series) {
  auto out = open_out(path);
  out << "n,t,kinetic,gradient,potential,total\n";
  for (const auto& s : series) {
    out << s.n << ',' << fmt(s.t) << ',' << fmt(s.kinetic) << ','
        << fmt(s.gradient) << ',' << fmt(s.potential) << ',' << fmt(s.total)
        << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<EnergySample> read_energy_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "n,t,kinetic,gradient,potential,total") {
    throw std::runtime_error("unexpected energy CSV header in " + path);
  }
  std::vector<EnergySample> series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 6) {
      throw std::runtime_error("malformed energy CSV row in " + path);
    }
    EnergySample s;
    s.n = std::strtol(cells[0].c_str(), nullptr, 10);
    s.t = parse_real(cells[1], path);
    s.kinetic = parse_real(cells[2], path);
    s.gradient = parse_real(cells[3], path);
    s.potential = parse_real(cells[4], path);
    s.total = parse_real(cells[5], path);
    series.push_back(s);
  }
  return series;
}

void write_error_csv(const std::string& path,
                     const std::vector<ConvergenceRow>& rows) {
  auto out = open_out(path);
  out << "level,dt,h,t,err_u,err_v,err_grad_u,order_u,order_v\n";
  for (const auto& row : rows) {
    for (const auto& cp : row.checkpoints) {
      out << row.level << ',' << fmt(row.dt) << ',' << fmt(row.h) << ','
          << fmt(cp.report.t) << ',' << fmt(cp.report.err_u) << ','
          << fmt(cp.report.err_v) << ',' << fmt(cp.report.err_grad_u) << ',';
      if (cp.order_u) out << fmt(*cp.order_u);
      out << ',';
      if (cp.order_v) out << fmt(*cp.order_v);
      out << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_vtk_snapshot(const std::string& path, const Field& f, double t) {
  const GridSpec& g = f.grid();
  const int n = f.n();
  auto out = open_out(path);
  out << "# vtk DataFile Version 3.0\n";
  out << "sine-Gordon field snapshot t=" << fmt(t) << '\n';
  out << "ASCII\n";
  out << "DATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << n << ' ' << n << " 1\n";
  out << "ORIGIN " << fmt(g.x_min) << ' ' << fmt(g.y_min) << " 0\n";
  out << "SPACING " << fmt(g.spacing) << ' ' << fmt(g.spacing) << " 1\n";
  out << "POINT_DATA " << f.size() << '\n';
  out << "SCALARS u double 1\n";
  out << "LOOKUP_TABLE default\n";
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      out << fmt(f(i, j)) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Field transformed(const Field& f, const std::function<double(double)>& fn) {
  if (!fn) return f;
  Field out(f.grid());
  const std::size_t count = f.size();
  for (std::size_t k = 0; k < count; ++k) out[k] = fn(f[k]);
  return out;
}

}  // namespace sgfd
