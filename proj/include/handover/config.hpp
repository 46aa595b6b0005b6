#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "handover/kvfile.hpp"
#include "handover/qlearning.hpp"
#include "handover/task.hpp"

namespace handover {

/// Full experiment description. Built from a flat `section.key = value`
/// file (sections anthro, boundary, box, rl, run, task, ik); every key is
/// optional.
struct ExperimentConfig {
  HandoverTask task;
  double step = 0.02;
  Hyperparams hyper;
  std::vector<std::uint64_t> seeds;
  std::vector<Vec3> starts;
  bool precompute = false;  // share one oracle score field across runs
  std::optional<Vec3> boundary_min;
  std::optional<Vec3> boundary_max;
  std::optional<Vec3> start_point;

  /// Changes the grid step and rebuilds the boundary.
  void set_step(double step);
  /// Hyperparameters with the start point snapped onto the current grid.
  Hyperparams run_hyper() const;

  /// Hash of everything that changes per-cell scores, as 16 hex digits.
  std::string geometry_hash() const;
};

/// Handover start points used for the optimized-vs-naive comparison.
std::vector<Vec3> default_comparison_starts();

/// Throws ConfigError naming the offending key.
ExperimentConfig parse_config(const std::map<std::string, std::string>& kv,
                              const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

Vec3 parse_point(const std::string& key, const std::string& text);
std::vector<Vec3> parse_point_list(const std::string& key, const std::string& text);


}  // namespace handover
