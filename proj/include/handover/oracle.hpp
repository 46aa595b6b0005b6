#pragma once

#include <map>
#include <string>
#include <vector>

#include "handover/qlearning.hpp"
#include "handover/task.hpp"

namespace handover {

struct SweepReport {
  std::map<int, std::size_t> histogram;  // postural score -> cell count
  std::map<int, double> fractions;
  std::map<int, std::size_t> final_reba_histogram;
  int global_min = 0;
  std::vector<GridIndex> argmin_cells;  // ascending linear order
  std::size_t cell_count = 0;
  std::size_t unreachable_cells = 0;
  double elapsed_seconds = 0.0;
};

struct SweepResult {
  SweepReport report;
  ScoreField field;
};

/// Scores every grid cell with OpenMP. `workers` <= 0 uses the runtime
/// default thread count. Output does not depend on the worker count.
SweepResult sweep(const HandoverTask& task, int workers = 0);

/// Single-threaded reference of the same sweep.
SweepResult sweep_serial(const HandoverTask& task);

/// Histogram, fractions, minimum and argmin set of a score field.
SweepReport summarize(const ScoreField& field);

struct Verdict {
  bool pass = false;
  bool position_in_argmin = false;
  int oracle_min = 0;
  int run_best = 0;
  std::string message;
};

/// Passes when the run found the oracle minimum score. Position agreement is
/// reported but not required, since several cells can share the minimum.
Verdict verify_against(const SweepReport& report, const RunRecord& run);

}  // namespace handover
