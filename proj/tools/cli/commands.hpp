#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bandedge/dynamics.hpp"
#include "bandedge/exact.hpp"
#include "cli/config.hpp"

namespace bandedge::cli {

struct CommandOptions {
  bool quick = false;
  /// Test hook for verify: "residue" perturbs R(z_1) by 1e-6.
  std::string inject_fault;
};

struct ModelCurve {
  std::string name;   // "special", "lorentzian_strong", "lorentzian_weak"
  std::string label;  // legend text
  Trajectory trajectory;
};

struct TrajectorySet {
  double tau = 0.0;         // time scale in physical units
  double time_unit = 1.0;   // physical duration of one configured time unit
  std::vector<double> grid; // times in the configured unit
  std::vector<ModelCurve> curves;
  std::vector<std::string> warnings;
};

/// Evaluates every selected model on the configured grid; runs the enabled
/// oracles and records disagreements as warnings. cfg must be valid.
TrajectorySet compute_trajectories(const RunConfig& cfg);

/// "key = value" comment lines of a CSV header, keyed by key.
std::vector<std::pair<std::string, std::string>> header_values(const std::vector<std::string>& comments);

int cmd_roots(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_trajectory(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace bandedge::cli
