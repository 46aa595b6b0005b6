#include "handover/config.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

namespace handover {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

// FNV-1a, 64-bit.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

const std::set<std::string> kKnownKeys = {
    "anthro.file", "anthro.height", "anthro.shoulder_width", "anthro.upper_arm",
    "anthro.forearm", "anthro.hand", "anthro.trunk", "anthro.neck", "anthro.hip_height",
    "anthro.knee_height", "boundary.step", "boundary.min", "boundary.max",
    "box.handle_separation", "rl.alpha", "rl.gamma", "rl.tau0", "rl.tau_step", "rl.tau_min",
    "rl.score_threshold", "rl.symmetry_weight", "rl.start", "rl.restart_every",
    "rl.trace_every", "rl.stop_at_postural", "run.count", "run.seed_base", "run.seeds",
    "run.budget_seconds", "run.budget_steps", "run.precompute", "task.load", "task.coupling",
    "task.activity", "task.starts", "ik.trunk_flexion_limit", "ik.trunk_side_limit",
    "ik.trunk_twist_limit", "ik.knee_flexion_limit", "ik.knee_step"};

}  // namespace

std::vector<Vec3> default_comparison_starts() {
  return {{0.028, 1.122, 1.354}, {0.263, 1.122, 1.354}, {-0.423, 1.122, 1.354},
          {0.028, 0.472, 0.6}, {0.028, 2.292, 1.354}};
}

Vec3 parse_point(const std::string& key, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ConfigError(key + ": expected 'x,y,z', got '" + text + "'");
  return {parse_double(key, trim(parts[0])), parse_double(key, trim(parts[1])),
          parse_double(key, trim(parts[2]))};
}

std::vector<Vec3> parse_point_list(const std::string& key, const std::string& text) {
  std::vector<Vec3> out;
  for (const auto& item : split(text, ';')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(parse_point(key, t));
  }
  return out;
}

void ExperimentConfig::set_step(double new_step) {
  if (!(new_step > 0.0) || !std::isfinite(new_step))
    throw ConfigError("boundary.step: must be positive");
  step = new_step;
  try {
    if (boundary_min || boundary_max) {
      const Vec3 lo{-0.5 * task.anthro.shoulder_width, task.anthro.knee_height, 0.0};
      const Vec3 hi{0.5 * task.anthro.shoulder_width, task.anthro.height, task.anthro.arm_reach()};
      task.boundary = Boundary::box(boundary_min.value_or(lo), boundary_max.value_or(hi), step);
    } else {
      task.boundary = Boundary::from_anthropometry(task.anthro, step);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("boundary: ") + e.what());
  }
  if (start_point && !task.boundary.contains(*start_point))
    throw ConfigError("rl.start: point lies outside the boundary");
}

Hyperparams ExperimentConfig::run_hyper() const {
  Hyperparams h = hyper;
  if (start_point) h.start = task.boundary.nearest_cell(*start_point);
  return h;
}

ExperimentConfig parse_config(const std::map<std::string, std::string>& kv,
                              const std::string& base_dir) {
  for (const auto& [key, value] : kv)
    if (!kKnownKeys.count(key)) throw ConfigError(key + ": unknown configuration key");

  const auto has = [&](const char* k) { return kv.count(k) > 0; };
  const auto num = [&](const char* k, double fallback) {
    return has(k) ? parse_double(k, kv.at(k)) : fallback;
  };
  const auto integer = [&](const char* k, long long fallback) {
    return has(k) ? parse_integer(k, kv.at(k)) : fallback;
  };

  ExperimentConfig cfg;

  // Anthropometry: an optional file, then inline overrides.
  std::map<std::string, double> body;
  if (has("anthro.file")) {
    std::filesystem::path p = kv.at("anthro.file");
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    for (const auto& [k, text] : read_key_value_file(p.string()))
      body[k] = parse_double("anthro.file:" + k, text);
  }
  for (const auto& [key, value] : kv)
    if (key.rfind("anthro.", 0) == 0 && key != "anthro.file")
      body[key.substr(7)] = parse_double(key, value);
  try {
    cfg.task.anthro = anthropometry_from_values(body);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("anthro: ") + e.what());
  }

  if (has("boundary.min")) cfg.boundary_min = parse_point("boundary.min", kv.at("boundary.min"));
  if (has("boundary.max")) cfg.boundary_max = parse_point("boundary.max", kv.at("boundary.max"));
  if (has("rl.start")) cfg.start_point = parse_point("rl.start", kv.at("rl.start"));
  cfg.set_step(num("boundary.step", 0.02));

  cfg.task.box.handle_separation = num("box.handle_separation", cfg.task.box.handle_separation);
  if (!(cfg.task.box.handle_separation > 0.0))
    throw ConfigError("box.handle_separation: must be positive");

  cfg.task.adjustments.load = static_cast<int>(integer("task.load", 0));
  cfg.task.adjustments.coupling = static_cast<int>(integer("task.coupling", 0));
  cfg.task.adjustments.activity = static_cast<int>(integer("task.activity", 0));
  try {
    cfg.task.adjustments.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("task: ") + e.what());
  }

  ReachLimits& lim = cfg.task.limits;
  lim.trunk_flexion = static_cast<int>(integer("ik.trunk_flexion_limit", lim.trunk_flexion));
  lim.trunk_side = static_cast<int>(integer("ik.trunk_side_limit", lim.trunk_side));
  lim.trunk_twist = static_cast<int>(integer("ik.trunk_twist_limit", lim.trunk_twist));
  lim.knee_flexion = static_cast<int>(integer("ik.knee_flexion_limit", lim.knee_flexion));
  lim.knee_step = static_cast<int>(integer("ik.knee_step", lim.knee_step));
  if (lim.trunk_flexion < 0 || lim.trunk_flexion > 90)
    throw ConfigError("ik.trunk_flexion_limit: must lie in 0..90");
  if (lim.trunk_side < 0 || lim.trunk_twist < 0)
    throw ConfigError("ik.trunk_side_limit/ik.trunk_twist_limit: must be non-negative");
  if (lim.knee_flexion < 0 || lim.knee_flexion > 150)
    throw ConfigError("ik.knee_flexion_limit: must lie in 0..150");
  if (lim.knee_step <= 0) throw ConfigError("ik.knee_step: must be positive");

  Hyperparams& h = cfg.hyper;
  h.alpha = num("rl.alpha", h.alpha);
  h.gamma = num("rl.gamma", h.gamma);
  h.tau0 = num("rl.tau0", h.tau0);
  h.tau_step = num("rl.tau_step", h.tau_step);
  h.tau_min = num("rl.tau_min", h.tau_min);
  h.score_threshold = num("rl.score_threshold", h.score_threshold);
  h.symmetry_weight = num("rl.symmetry_weight", h.symmetry_weight);
  h.restart_every = integer("rl.restart_every", h.restart_every);
  h.trace_every = integer("rl.trace_every", h.trace_every);
  if (has("rl.stop_at_postural"))
    h.stop_at_postural = static_cast<int>(integer("rl.stop_at_postural", 0));
  h.budget = {};
  if (has("run.budget_seconds")) h.budget.seconds = num("run.budget_seconds", 0.0);
  if (has("run.budget_steps")) h.budget.steps = integer("run.budget_steps", 0);
  if (!h.budget.seconds && !h.budget.steps) h.budget.steps = 100000;
  try {
    h.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const long long count = integer("run.count", 10);
  if (has("run.seeds")) {
    for (const auto& item : split(kv.at("run.seeds"), ',')) {
      const std::string t = trim(item);
      if (t.empty()) continue;
      const long long v = parse_integer("run.seeds", t);
      if (v < 0) throw ConfigError("run.seeds: seeds must be non-negative");
      cfg.seeds.push_back(static_cast<std::uint64_t>(v));
    }
    if (has("run.count") && static_cast<long long>(cfg.seeds.size()) != count)
      throw ConfigError("run.seeds: list length must equal run.count");
  } else {
    if (count < 0) throw ConfigError("run.count: must be non-negative");
    const long long base = integer("run.seed_base", 1);
    if (base < 0) throw ConfigError("run.seed_base: must be non-negative");
    for (long long i = 0; i < count; ++i) cfg.seeds.push_back(static_cast<std::uint64_t>(base + i));
  }
  if (cfg.seeds.empty()) throw ConfigError("run.count: at least one seed is required");

  if (has("run.precompute")) cfg.precompute = parse_bool("run.precompute", kv.at("run.precompute"));

  cfg.starts = has("task.starts") ? parse_point_list("task.starts", kv.at("task.starts"))
                                  : default_comparison_starts();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_config(read_key_value_file(path), dir.empty() ? "." : dir.string());
}

std::string ExperimentConfig::geometry_hash() const {
  const Anthropometry& a = task.anthro;
  const Boundary& b = task.boundary;
  const ReachLimits& l = task.limits;
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "anthro=%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g;"
                "boundary=%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g;box=%.17g;"
                "adj=%d,%d,%d;ik=%d,%d,%d,%d,%d",
                a.height, a.shoulder_width, a.upper_arm, a.forearm, a.hand, a.trunk, a.neck,
                a.hip_height, a.knee_height, b.min().x, b.min().y, b.min().z, b.max().x,
                b.max().y, b.max().z, b.step(), task.box.handle_separation,
                task.adjustments.load, task.adjustments.coupling, task.adjustments.activity,
                l.trunk_flexion, l.trunk_side, l.trunk_twist, l.knee_flexion, l.knee_step);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(buf)));
  return hex;
}

}  // namespace handover
