#include "evogain/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace evogain {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "t,x,g\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << format_double(traj.times[i]) << ',' << format_double(traj.states[i].x)
        << ',' << format_double(traj.states[i].g) << '\n';
  }
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line != "t,x,g") {
    throw std::runtime_error(path + ": expected header 't,x,g'");
  }
  Trajectory traj;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    double t = 0.0, x = 0.0, g = 0.0;
    char c1 = 0, c2 = 0;
    if (!(row >> t >> c1 >> x >> c2 >> g) || c1 != ',' || c2 != ',') {
      throw std::runtime_error(path + ": malformed row at line " +
                               std::to_string(lineno));
    }
    traj.times.push_back(t);
    traj.states.push_back({x, g});
  }
  if (traj.times.empty()) {
    throw std::runtime_error(path + ": no data rows");
  }
  return traj;
}

}  // namespace evogain
