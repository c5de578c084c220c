#ifndef EVOGAIN_CSV_HPP
#define EVOGAIN_CSV_HPP

#include <string>

#include "evogain/integrator.hpp"

namespace evogain {

/// Writes the trajectory as "t,x,g" rows.  Values are serialized with 17
/// significant digits so that parsing the file back reproduces the doubles
/// bit for bit.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

/// Parses a file produced by write_trajectory_csv.  Throws
/// std::runtime_error on malformed input.
Trajectory read_trajectory_csv(const std::string& path);

/// 17-significant-digit decimal form of a double (shortest round-trip not
/// required, 17 digits always round-trip).
std::string format_double(double v);

}  // namespace evogain

#endif  // EVOGAIN_CSV_HPP
