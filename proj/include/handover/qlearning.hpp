#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "handover/task.hpp"

namespace handover {

inline constexpr int kActionCount = 6;
using ActionValues = std::array<double, kActionCount>;

/// Actions 0..5 move the midpoint +x, -x, +y, -y, +z, -z by one cell.
/// Moves that would leave the grid keep the state where it is.
GridIndex apply_action(const GridIndex& state, int action, const Boundary& boundary);

/// Sparse state -> action-value map; unvisited states read as zero.
class QTable {
 public:
  const ActionValues& values(const GridIndex& s) const;
  double max_value(const GridIndex& s) const;
  double get(const GridIndex& s, int action) const { return values(s)[action]; }
  void set(const GridIndex& s, int action, double v);
  std::size_t visited_states() const { return table_.size(); }

 private:
  static std::uint64_t key(const GridIndex& s);
  std::unordered_map<std::uint64_t, ActionValues> table_;
};

/// Boltzmann probabilities, evaluated with max-shifted exponentials.
ActionValues softmax_probabilities(const ActionValues& q, double tau);

int softmax_select(const ActionValues& q, double tau, std::mt19937_64& rng);

/// 0 when the handle midpoint is centered on the body, falling linearly to
/// -1 at a lateral offset of half the shoulder width.
double symmetry_score(const HandTargets& targets, double body_center_x, double shoulder_width);

/// 1 / E^2 + weight * S, for postural score E >= 2.
double reward(int postural, double symmetry, double symmetry_weight = 1.0);

void q_update(QTable& q, const GridIndex& s, int action, double r, const GridIndex& next,
              double alpha, double gamma);

struct TemperatureSchedule {
  double threshold = 5.0;
  double step = 0.1;
  double tau_min = 0.05;
  double tau_max = 2.0;
};

/// Cools by `step` when the score improves to below the threshold, warms
/// by `step` when it worsens, and stays put otherwise; clamped to
/// [tau_min, tau_max].
double adapt_temperature(double tau, int prev_postural, int new_postural,
                         const TemperatureSchedule& schedule = {});

struct Budget {
  std::optional<double> seconds;
  std::optional<std::int64_t> steps;
};

struct Hyperparams {
  double alpha = 0.1;
  double gamma = 0.9;
  double tau0 = 1.0;
  double tau_step = 0.1;
  double tau_min = 0.05;
  double score_threshold = 5.0;
  double symmetry_weight = 1.0;
  Budget budget{std::nullopt, 100000};
  std::optional<GridIndex> start;        // default: grid center
  std::int64_t restart_every = 0;         // 0 = never restart
  std::optional<int> stop_at_postural;    // end early once this score is found
  std::int64_t trace_every = 1000;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  TemperatureSchedule schedule() const {
    return {score_threshold, tau_step, tau_min, 2.0 * tau0};
  }
};

struct TracePoint {
  std::int64_t step = 0;
  int postural = 0;
  int best = 0;
  double tau = 0.0;
};

struct RunRecord {
  std::uint64_t seed = 0;
  int best_postural = 0;
  GridIndex best_cell;
  Vec3 best_position;
  std::int64_t steps = 0;
  std::size_t visited_states = 0;
  std::vector<TracePoint> trace;
};

/// Dense per-cell scores for a boundary, e.g. from an oracle sweep.
struct ScoreField {
  Boundary boundary;
  std::vector<CellScore> cells;

  const CellScore& at(const GridIndex& g) const { return cells[boundary.linear(g)]; }
};

/// One continuing Boltzmann/Q-learning walk over the task grid. When
/// `cache` is given (same boundary) cell scores are looked up instead of
/// solved.
RunRecord train(const HandoverTask& task, const Hyperparams& hyper, std::uint64_t seed,
                const ScoreField* cache = nullptr);

}  // namespace handover
