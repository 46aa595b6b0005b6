#include "handover/experiment.hpp"

#include <stdexcept>

#include "handover/baseline.hpp"

namespace handover {

std::vector<RunRecord> train_campaign(const HandoverTask& task, const Hyperparams& hyper,
                                      const std::vector<std::uint64_t>& seeds,
                                      const ScoreField* cache) {
  hyper.validate();
  std::vector<RunRecord> runs(seeds.size());
  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    runs[idx] = train(task, hyper, seeds[idx], cache);
  }
  return runs;
}

std::size_t best_run(const std::vector<RunRecord>& runs) {
  if (runs.empty()) throw std::invalid_argument("no runs");
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].best_postural < runs[best].best_postural) best = r;
  return best;
}

GridIndex oracle_optimum(const HandoverTask& task, const SweepReport& report) {
  if (report.argmin_cells.empty()) throw std::invalid_argument("sweep report has no minimum");
  const Vec3 middle = task.boundary.position(task.boundary.center());
  GridIndex best = report.argmin_cells.front();
  double best_sym = -1e300;
  double best_dist = 1e300;
  for (const GridIndex& g : report.argmin_cells) {
    const Vec3 p = task.boundary.position(g);
    const double s = symmetry_score(task.box.targets(p), 0.0, task.anthro.shoulder_width);
    const double d = distance(p, middle);
    if (s > best_sym + 1e-12 || (s > best_sym - 1e-12 && d < best_dist - 1e-12)) {
      best = g;
      best_sym = s;
      best_dist = d;
    }
  }
  return best;
}

std::vector<ComparisonRow> compare_to_baseline(const HandoverTask& task,
                                               const Vec3& optimized_position,
                                               const std::vector<Vec3>& starts) {
  if (starts.empty()) throw std::invalid_argument("comparison needs at least one start point");
  const PointEvaluation opt = evaluate_point(task, optimized_position);
  std::vector<ComparisonRow> rows;
  for (const Vec3& start : starts) {
    const Vec3 naive = task.boundary.position(shortest_distance_target(start, task.boundary));
    const PointEvaluation base = evaluate_point(task, naive);
    rows.push_back({start, optimized_position, naive, opt.breakdown.postural,
                    base.breakdown.postural, opt.breakdown.final_reba,
                    base.breakdown.final_reba});
  }
  return rows;
}

}  // namespace handover
