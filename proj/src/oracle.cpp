#include "handover/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace handover {
namespace {

template <typename Fill>
SweepResult run_sweep(const HandoverTask& task, Fill&& fill) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult out{{}, ScoreField{task.boundary, std::vector<CellScore>(task.boundary.cell_count())}};
  fill(out.field);
  out.report = summarize(out.field);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  out.report.elapsed_seconds = dt.count();
  return out;
}

}  // namespace

SweepReport summarize(const ScoreField& field) {
  SweepReport r;
  r.cell_count = field.cells.size();
  r.global_min = std::numeric_limits<int>::max();
  for (std::size_t n = 0; n < field.cells.size(); ++n) {
    const CellScore& c = field.cells[n];
    ++r.histogram[c.postural];
    ++r.final_reba_histogram[c.final_reba];
    if (!c.reachable) ++r.unreachable_cells;
    if (c.postural < r.global_min) {
      r.global_min = c.postural;
      r.argmin_cells.clear();
    }
    if (c.postural == r.global_min) r.argmin_cells.push_back(field.boundary.unlinear(n));
  }
  for (const auto& [score, count] : r.histogram)
    r.fractions[score] = static_cast<double>(count) / static_cast<double>(r.cell_count);
  return r;
}

SweepResult sweep_serial(const HandoverTask& task) {
  return run_sweep(task, [&](ScoreField& field) {
    for (std::size_t n = 0; n < field.cells.size(); ++n)
      field.cells[n] = evaluate_cell(task, task.boundary.unlinear(n));
  });
}

SweepResult sweep(const HandoverTask& task, int workers) {
  return run_sweep(task, [&](ScoreField& field) {
    const auto count = static_cast<std::ptrdiff_t>(field.cells.size());
#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
#endif
    for (std::ptrdiff_t n = 0; n < count; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      field.cells[idx] = evaluate_cell(task, task.boundary.unlinear(idx));
    }
  });
}

Verdict verify_against(const SweepReport& report, const RunRecord& run) {
  Verdict v;
  v.oracle_min = report.global_min;
  v.run_best = run.best_postural;
  v.pass = run.best_postural == report.global_min;
  v.position_in_argmin = std::binary_search(report.argmin_cells.begin(),
                                            report.argmin_cells.end(), run.best_cell);
  if (run.best_postural < report.global_min) {
    v.pass = false;
    v.message = "run reports a score below the oracle minimum; configurations differ";
  } else if (v.pass) {
    v.message = "run reached the oracle minimum " + std::to_string(report.global_min);
  } else {
    v.message = "run best " + std::to_string(run.best_postural) + " vs oracle minimum " +
                std::to_string(report.global_min);
  }
  return v;
}

}  // namespace handover
