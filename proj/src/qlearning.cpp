#include "handover/qlearning.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace handover {

GridIndex apply_action(const GridIndex& state, int action, const Boundary& boundary) {
  GridIndex next = state;
  switch (action) {
    case 0: ++next.i; break;
    case 1: --next.i; break;
    case 2: ++next.j; break;
    case 3: --next.j; break;
    case 4: ++next.k; break;
    case 5: --next.k; break;
    default: throw std::out_of_range("action must lie in 0..5");
  }
  return boundary.contains(next) ? next : state;
}

std::uint64_t QTable::key(const GridIndex& s) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.i)) << 42) |
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.j)) << 21) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.k));
}

const ActionValues& QTable::values(const GridIndex& s) const {
  static const ActionValues zeros{};
  const auto it = table_.find(key(s));
  return it == table_.end() ? zeros : it->second;
}

double QTable::max_value(const GridIndex& s) const {
  const ActionValues& v = values(s);
  return *std::max_element(v.begin(), v.end());
}

void QTable::set(const GridIndex& s, int action, double v) { table_[key(s)][action] = v; }

ActionValues softmax_probabilities(const ActionValues& q, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("softmax temperature must be positive");
  const double top = *std::max_element(q.begin(), q.end());
  ActionValues p{};
  double sum = 0.0;
  for (int a = 0; a < kActionCount; ++a) {
    p[a] = std::exp((q[a] - top) / tau);
    sum += p[a];
  }
  for (double& v : p) v /= sum;
  return p;
}

int softmax_select(const ActionValues& q, double tau, std::mt19937_64& rng) {
  const ActionValues p = softmax_probabilities(q, tau);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double acc = 0.0;
  for (int a = 0; a < kActionCount - 1; ++a) {
    acc += p[a];
    if (u < acc) return a;
  }
  return kActionCount - 1;
}

double symmetry_score(const HandTargets& targets, double body_center_x, double shoulder_width) {
  const double mid_x = 0.5 * (targets.left.x + targets.right.x);
  return -std::abs(mid_x - body_center_x) / (0.5 * shoulder_width);
}

double reward(int postural, double symmetry, double symmetry_weight) {
  if (postural < 2) throw std::invalid_argument("postural score is at least 2");
  const double e = postural;
  return 1.0 / (e * e) + symmetry_weight * symmetry;
}

void q_update(QTable& q, const GridIndex& s, int action, double r, const GridIndex& next,
              double alpha, double gamma) {
  const double target = r + gamma * q.max_value(next);
  q.set(s, action, (1.0 - alpha) * q.get(s, action) + alpha * target);
}

double adapt_temperature(double tau, int prev_postural, int new_postural,
                         const TemperatureSchedule& schedule) {
  if (new_postural < prev_postural && new_postural < schedule.threshold)
    tau -= schedule.step;
  else if (new_postural > prev_postural)
    tau += schedule.step;
  return std::clamp(tau, schedule.tau_min, schedule.tau_max);
}

void Hyperparams::validate() const {
  const auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!(alpha > 0.0 && alpha <= 1.0)) fail("rl.alpha must lie in (0, 1]");
  if (!(gamma >= 0.0 && gamma < 1.0)) fail("rl.gamma must lie in [0, 1)");
  if (!(tau0 > 0.0)) fail("rl.tau0 must be positive");
  if (!(tau_step >= 0.0)) fail("rl.tau_step must be non-negative");
  if (!(tau_min > 0.0 && tau_min <= tau0)) fail("rl.tau_min must lie in (0, tau0]");
  if (!std::isfinite(symmetry_weight)) fail("rl.symmetry_weight must be finite");
  if (!budget.seconds && !budget.steps) fail("budget: give a step count or a time limit");
  if (budget.seconds && !(*budget.seconds > 0.0)) fail("budget: seconds must be positive");
  if (budget.steps && *budget.steps <= 0) fail("budget: steps must be positive");
  if (restart_every < 0) fail("rl.restart_every must be non-negative");
  if (trace_every <= 0) fail("rl.trace_every must be positive");
}

RunRecord train(const HandoverTask& task, const Hyperparams& hyper, std::uint64_t seed,
                const ScoreField* cache) {
  hyper.validate();
  const Boundary& grid = task.boundary;
  if (cache && !(cache->boundary == grid))
    throw std::invalid_argument("score cache was built for a different boundary");
  const GridIndex start = hyper.start.value_or(grid.center());
  if (!grid.contains(start)) throw std::invalid_argument("rl.start lies outside the grid");

  std::unordered_map<std::size_t, CellScore> memo;
  const auto score = [&](const GridIndex& g) -> CellScore {
    if (cache) return cache->at(g);
    const std::size_t n = grid.linear(g);
    if (const auto it = memo.find(n); it != memo.end()) return it->second;
    return memo.emplace(n, evaluate_cell(task, g)).first->second;
  };
  const auto symmetry = [&](const GridIndex& g) {
    return symmetry_score(task.box.targets(grid.position(g)), 0.0, task.anthro.shoulder_width);
  };

  std::mt19937_64 rng(seed);
  QTable q;
  const TemperatureSchedule schedule = hyper.schedule();
  double tau = hyper.tau0;

  RunRecord rec;
  rec.seed = seed;
  GridIndex state = start;
  int prev = score(state).postural;
  rec.best_postural = prev;
  rec.best_cell = state;
  double best_symmetry = symmetry(state);
  rec.trace.push_back({0, prev, prev, tau});

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  std::int64_t step = 0;
  const auto done = [&] {
    if (hyper.budget.steps && step >= *hyper.budget.steps) return true;
    if (hyper.stop_at_postural && rec.best_postural <= *hyper.stop_at_postural) return true;
    if (hyper.budget.seconds && step % 256 == 0) {
      const std::chrono::duration<double> dt = clock::now() - t0;
      if (dt.count() >= *hyper.budget.seconds) return true;
    }
    return false;
  };

  while (!done()) {
    ++step;
    const int action = softmax_select(q.values(state), tau, rng);
    const GridIndex next = apply_action(state, action, grid);
    const int postural = score(next).postural;
    const double sym = symmetry(next);
    q_update(q, state, action, reward(postural, sym, hyper.symmetry_weight), next, hyper.alpha,
             hyper.gamma);
    tau = adapt_temperature(tau, prev, postural, schedule);
    prev = postural;
    state = next;

    bool improved = false;
    if (postural < rec.best_postural ||
        (postural == rec.best_postural && sym > best_symmetry)) {
      improved = postural < rec.best_postural;
      rec.best_postural = postural;
      rec.best_cell = state;
      best_symmetry = sym;
    }
    if (improved || step % hyper.trace_every == 0)
      rec.trace.push_back({step, postural, rec.best_postural, tau});

    if (hyper.restart_every > 0 && step % hyper.restart_every == 0) {
      state = {std::uniform_int_distribution<int>(0, grid.counts()[0] - 1)(rng),
               std::uniform_int_distribution<int>(0, grid.counts()[1] - 1)(rng),
               std::uniform_int_distribution<int>(0, grid.counts()[2] - 1)(rng)};
      prev = score(state).postural;
    }
  }
  if (rec.trace.back().step != step) rec.trace.push_back({step, prev, rec.best_postural, tau});

  rec.steps = step;
  rec.best_position = grid.position(rec.best_cell);
  rec.visited_states = q.visited_states();
  return rec;
}

}  // namespace handover
