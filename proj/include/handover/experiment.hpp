#pragma once

#include <vector>

#include "handover/config.hpp"
#include "handover/oracle.hpp"

namespace handover {

/// Independent seeded runs, executed in parallel. Results keep seed order.
std::vector<RunRecord> train_campaign(const HandoverTask& task, const Hyperparams& hyper,
                                      const std::vector<std::uint64_t>& seeds,
                                      const ScoreField* cache = nullptr);

/// Index of the run with the lowest best score (first on ties).
std::size_t best_run(const std::vector<RunRecord>& runs);

/// Oracle minimum closest to the body midline, then closest to the middle
/// of the search box (first in linear order on exact ties).
GridIndex oracle_optimum(const HandoverTask& task, const SweepReport& report);

struct ComparisonRow {
  Vec3 start;
  Vec3 optimized_position;
  Vec3 baseline_position;
  int optimized_postural = 0;
  int baseline_postural = 0;
  int optimized_final_reba = 0;
  int baseline_final_reba = 0;
};

/// Scores the fixed optimized target against the shortest-distance target
/// for every start. Throws std::invalid_argument for an empty start list.
std::vector<ComparisonRow> compare_to_baseline(const HandoverTask& task,
                                               const Vec3& optimized_position,
                                               const std::vector<Vec3>& starts);

}  // namespace handover
