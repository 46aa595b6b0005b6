// handover: command-line runner for the handover placement experiments.
//
//   handover train     --config exp.cfg --out results/
//   handover sweep     --config exp.cfg --out results/ [--cells]
//   handover compare   --config exp.cfg --optimum results/best_position.csv
//   handover pose-dump --config exp.cfg --point 0,1.2,0.4
//   handover verify    --config exp.cfg --run results/run_1.json [--report sweep_report.json]
//
// Exit codes: 0 ok, 2 configuration error, 3 verification failure, 1 other.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "handover/artifacts.hpp"
#include "handover/baseline.hpp"
#include "handover/config.hpp"
#include "handover/experiment.hpp"
#include "handover/oracle.hpp"

namespace fs = std::filesystem;
using namespace handover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;

struct CommonOptions {
  std::string config;
  std::optional<long long> seed_base;
  std::optional<double> budget_seconds;
  std::optional<long long> budget_steps;
  std::optional<double> step;
  std::string out = ".";
  int workers = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config, "experiment configuration file");
  cmd->add_option("--step", o.step, "grid step in meters (overrides boundary.step)");
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--workers", o.workers, "OpenMP threads, 0 = runtime default");
}

void add_run_overrides(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed-base", o.seed_base, "first seed; seeds are base .. base+count-1");
  auto* secs = cmd->add_option("--budget-seconds", o.budget_seconds, "wall-clock budget per run");
  auto* steps = cmd->add_option("--budget-steps", o.budget_steps, "step budget per run");
  secs->excludes(steps);
}

ExperimentConfig load(const CommonOptions& o) {
  ExperimentConfig cfg = o.config.empty() ? parse_config({}) : load_config(o.config);
  if (o.step) cfg.set_step(*o.step);
  if (o.seed_base) {
    if (*o.seed_base < 0) throw ConfigError("--seed-base: must be non-negative");
    const std::size_t n = cfg.seeds.size();
    cfg.seeds.clear();
    for (std::size_t i = 0; i < n; ++i)
      cfg.seeds.push_back(static_cast<std::uint64_t>(*o.seed_base) + i);
  }
  if (o.budget_seconds) {
    if (!(*o.budget_seconds > 0.0)) throw ConfigError("--budget-seconds: must be positive");
    cfg.hyper.budget = {*o.budget_seconds, std::nullopt};
  }
  if (o.budget_steps) {
    if (*o.budget_steps <= 0) throw ConfigError("--budget-steps: must be positive");
    cfg.hyper.budget = {std::nullopt, *o.budget_steps};
  }
  try {
    cfg.run_hyper().validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::string out_path(const CommonOptions& o, const std::string& name) {
  return (fs::path(o.out) / name).string();
}

int cmd_train(const CommonOptions& o) {
  const ExperimentConfig cfg = load(o);
  const std::string hash = cfg.geometry_hash();

  std::optional<SweepResult> cache;
  if (cfg.precompute) cache = sweep(cfg.task, o.workers);
  const std::vector<RunRecord> runs = train_campaign(
      cfg.task, cfg.run_hyper(), cfg.seeds, cache ? &cache->field : nullptr);
  const RunRecord& best = runs[best_run(runs)];

  for (const RunRecord& r : runs)
    write_file(out_path(o, "run_" + std::to_string(r.seed) + ".json"),
               run_record_to_json(r, hash).dump(2) + "\n");
  write_file(out_path(o, "train_summary.csv"), train_summary_csv(runs));
  write_file(out_path(o, "best_position.csv"), best_position_csv(best.best_position));

  for (const RunRecord& r : runs)
    std::printf("seed %llu: best postural %d after %lld steps\n",
                static_cast<unsigned long long>(r.seed), r.best_postural,
                static_cast<long long>(r.steps));
  std::printf("best position (m): %.3f %.3f %.3f  postural %d\n", best.best_position.x,
              best.best_position.y, best.best_position.z, best.best_postural);
  return kExitOk;
}

int cmd_sweep(const CommonOptions& o, bool cells, bool serial) {
  const ExperimentConfig cfg = load(o);
  const SweepResult res = serial ? sweep_serial(cfg.task) : sweep(cfg.task, o.workers);

  write_file(out_path(o, "sweep_report.json"),
             sweep_report_to_json(res.report, cfg.task.boundary, cfg.geometry_hash()).dump(2) + "\n");
  write_file(out_path(o, "histogram.csv"), histogram_csv(res.report));
  if (cells) write_file(out_path(o, "cells.csv"), cells_csv(res.field));

  std::printf("%zu cells (%zu unreachable) in %.2f s, minimum postural %d at %zu cells\n",
              res.report.cell_count, res.report.unreachable_cells, res.report.elapsed_seconds,
              res.report.global_min, res.report.argmin_cells.size());
  for (const auto& [s, n] : res.report.histogram)
    std::printf("  postural %2d: %8zu  (%.4f)\n", s, n, res.report.fractions.at(s));
  return kExitOk;
}

int cmd_compare(const CommonOptions& o, const std::string& optimum, bool oracle,
                const std::string& starts_text) {
  if (optimum.empty() && !oracle)
    throw ConfigError(
        "compare needs an optimized target: pass --optimum PATH (best_position.csv written by "
        "'handover train') or --oracle to take it from a full sweep");
  ExperimentConfig cfg = load(o);
  if (!starts_text.empty()) cfg.starts = parse_point_list("--starts", starts_text);
  if (cfg.starts.empty()) throw ConfigError("task.starts: at least one start point is required");

  Vec3 target;
  if (oracle) {
    const SweepResult res = sweep(cfg.task, o.workers);
    target = cfg.task.boundary.position(oracle_optimum(cfg.task, res.report));
  } else {
    target = read_best_position_csv(optimum);
  }
  if (!cfg.task.boundary.contains(target, 1e-6))
    throw ConfigError("optimized target lies outside the configured boundary");

  const std::vector<ComparisonRow> rows = compare_to_baseline(cfg.task, target, cfg.starts);
  const std::string table = comparison_table(rows);
  write_file(out_path(o, "comparison.csv"), comparison_csv(rows));
  write_file(out_path(o, "comparison.txt"), table);
  std::printf("optimized target (m): %.3f %.3f %.3f\n%s", target.x, target.y, target.z,
              table.c_str());
  return kExitOk;
}

int cmd_pose_dump(const CommonOptions& o, const std::string& point_text) {
  const ExperimentConfig cfg = load(o);
  const Vec3 p = parse_point("--point", point_text);
  if (!cfg.task.boundary.contains(p, 1e-9))
    throw ConfigError("--point: lies outside the search boundary");

  const PointEvaluation ev = evaluate_point(cfg.task, p);
  nlohmann::json doc = {{"schema_version", kSchemaVersion},
                        {"kind", "pose_dump"},
                        {"config_hash", cfg.geometry_hash()},
                        {"point", {p.x, p.y, p.z}},
                        {"reachable", ev.reach.reachable},
                        {"residual_m", {ev.reach.residual[0], ev.reach.residual[1]}},
                        {"pose", pose_to_json(ev.reach.pose)},
                        {"breakdown", reba::to_json(ev.breakdown)}};
  write_file(out_path(o, "breakdown.json"), doc.dump(2) + "\n");
  write_file(out_path(o, "landmarks.csv"),
             landmarks_csv(forward_kinematics(cfg.task.anthro, ev.reach.pose)));
  std::printf("postural %d, final REBA %d%s\n", ev.breakdown.postural, ev.breakdown.final_reba,
              ev.reach.reachable ? "" : " (target not reachable)");
  return kExitOk;
}

int cmd_verify(const CommonOptions& o, const std::string& run_path, const std::string& report_path) {
  const ExperimentConfig cfg = load(o);
  const std::string hash = cfg.geometry_hash();

  std::string run_hash;
  const RunRecord run = run_record_from_json(nlohmann::json::parse(read_file(run_path)), &run_hash);
  if (run_hash != hash)
    throw ConfigError(run_path + ": recorded config_hash " + run_hash +
                      " does not match the current configuration (" + hash + ")");

  SweepReport report;
  if (report_path.empty()) {
    report = sweep(cfg.task, o.workers).report;
  } else {
    std::string report_hash;
    report = sweep_report_from_json(nlohmann::json::parse(read_file(report_path)), &report_hash);
    if (report_hash != hash)
      throw ConfigError(report_path + ": recorded config_hash " + report_hash +
                        " does not match the current configuration (" + hash + ")");
  }
  const Verdict v = verify_against(report, run);
  std::printf("%s: %s\n", v.pass ? "PASS" : "FAIL", v.message.c_str());
  return v.pass ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ergonomic handover placement: training, sweeps and comparisons"};
  app.require_subcommand(1);

  CommonOptions train_o, sweep_o, compare_o, dump_o, verify_o;

  auto* train_cmd = app.add_subcommand("train", "run seeded Q-learning searches");
  add_common(train_cmd, train_o);
  add_run_overrides(train_cmd, train_o);

  bool cells = false, serial = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "score every grid cell");
  add_common(sweep_cmd, sweep_o);
  sweep_cmd->add_flag("--cells", cells, "also write cells.csv with every cell score");
  sweep_cmd->add_flag("--serial", serial, "use the single-threaded reference sweep");

  std::string optimum, starts;
  bool oracle = false;
  auto* compare_cmd = app.add_subcommand("compare", "optimized target vs shortest-distance target");
  add_common(compare_cmd, compare_o);
  compare_cmd->add_option("--optimum", optimum, "best_position.csv from a training run");
  compare_cmd->add_flag("--oracle", oracle, "take the optimized target from a full sweep");
  compare_cmd->add_option("--starts", starts, "start points 'x,y,z; x,y,z' (overrides task.starts)");

  std::string point;
  auto* dump_cmd = app.add_subcommand("pose-dump", "REBA breakdown and landmarks at one point");
  add_common(dump_cmd, dump_o);
  dump_cmd->add_option("--point", point, "handover midpoint x,y,z in meters")->required();

  std::string run_path, report_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a run against the oracle minimum");
  add_common(verify_cmd, verify_o);
  verify_cmd->add_option("--run", run_path, "run record JSON")->required();
  verify_cmd->add_option("--report", report_path, "sweep_report.json (default: sweep now)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*train_cmd) return cmd_train(train_o);
    if (*sweep_cmd) return cmd_sweep(sweep_o, cells, serial);
    if (*compare_cmd) return cmd_compare(compare_o, optimum, oracle, starts);
    if (*dump_cmd) return cmd_pose_dump(dump_o, point);
    if (*verify_cmd) return cmd_verify(verify_o, run_path, report_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "malformed JSON: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitOther;
  }
  return kExitOther;
}
