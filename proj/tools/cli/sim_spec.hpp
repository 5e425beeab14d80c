#pragma once

#include <string>
#include <vector>

#include "dimfree/dimvar.hpp"

namespace dimfree::cli {

// key = value lines, '#' comments. Matrix paths are relative to the spec
// file. Lists are comma separated and used cyclically.
//
//   structure = aleph2
//   M = m0.mat, m1.mat
//   B = b.mat             C = c.mat
//   x0 = x0.mat
//   horizon = 20          (discrete)
//   T = 1                 dt = 1e-3   (continuous)
//   u = u0.mat, u1.mat    eta = e0.mat, e1.mat
//   control_period = 0.1  disturbance_period = 0.1   (continuous only)
//   weighted = true
//   output = traj.csv
struct SimFile {
  SystemSpec system;
  bool continuous = false;
  std::vector<HVec> u;
  std::vector<HVec> eta;
  double control_period = 0.0;
  double disturbance_period = 0.0;
  std::string output;
};

SimFile parse_sim_spec(const std::string& text, const std::string& base_dir);
SimFile read_sim_spec(const std::string& path);

Trajectory run_simulation(const SimFile& sim);

}  // namespace dimfree::cli
