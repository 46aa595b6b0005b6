#include "handover/artifacts.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "handover/kvfile.hpp"

namespace handover {
namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string meters(double v) { return fmt("%.6f", v); }

std::string xyz(const Vec3& p) { return meters(p.x) + "," + meters(p.y) + "," + meters(p.z); }

nlohmann::json point(const Vec3& p) { return nlohmann::json::array({p.x, p.y, p.z}); }

nlohmann::json cell(const GridIndex& g) { return nlohmann::json::array({g.i, g.j, g.k}); }

void expect_kind(const nlohmann::json& doc, const char* kind) {
  if (!doc.is_object() || doc.value("kind", "") != kind)
    throw ConfigError(std::string("expected a '") + kind + "' document");
  if (doc.value("schema_version", -1) != kSchemaVersion)
    throw ConfigError(std::string(kind) + ": unsupported schema_version");
}

}  // namespace

nlohmann::json run_record_to_json(const RunRecord& run, const std::string& config_hash) {
  nlohmann::json trace = nlohmann::json::array();
  for (const TracePoint& t : run.trace) trace.push_back({t.step, t.postural, t.best, t.tau});
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "run_record"},
      {"config_hash", config_hash},
      {"seed", run.seed},
      {"best_postural", run.best_postural},
      {"best_cell", cell(run.best_cell)},
      {"best_position", point(run.best_position)},
      {"steps", run.steps},
      {"visited_states", run.visited_states},
      {"trace_columns", {"step", "postural", "best", "tau"}},
      {"trace", std::move(trace)},
  };
}

RunRecord run_record_from_json(const nlohmann::json& doc, std::string* config_hash) {
  expect_kind(doc, "run_record");
  try {
    RunRecord r;
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.best_postural = doc.at("best_postural").get<int>();
    const auto& c = doc.at("best_cell");
    r.best_cell = {c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()};
    const auto& p = doc.at("best_position");
    r.best_position = {p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()};
    r.steps = doc.at("steps").get<std::int64_t>();
    r.visited_states = doc.at("visited_states").get<std::size_t>();
    for (const auto& t : doc.at("trace"))
      r.trace.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<int>(), t.at(2).get<int>(),
                         t.at(3).get<double>()});
    if (config_hash) *config_hash = doc.at("config_hash").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run_record: ") + e.what());
  }
}

nlohmann::json sweep_report_to_json(const SweepReport& report, const Boundary& boundary,
                                    const std::string& config_hash, bool include_elapsed) {
  nlohmann::json hist = nlohmann::json::object();
  nlohmann::json frac = nlohmann::json::object();
  nlohmann::json reba_hist = nlohmann::json::object();
  for (const auto& [s, n] : report.histogram) hist[std::to_string(s)] = n;
  for (const auto& [s, f] : report.fractions) frac[std::to_string(s)] = f;
  for (const auto& [s, n] : report.final_reba_histogram) reba_hist[std::to_string(s)] = n;
  nlohmann::json argmin = nlohmann::json::array();
  for (const GridIndex& g : report.argmin_cells) argmin.push_back(cell(g));

  nlohmann::json doc = {
      {"schema_version", kSchemaVersion},
      {"kind", "sweep_report"},
      {"config_hash", config_hash},
      {"grid", {{"counts", boundary.counts()}, {"step", boundary.step()},
                {"min", point(boundary.min())}, {"max", point(boundary.max())}}},
      {"cell_count", report.cell_count},
      {"unreachable_cells", report.unreachable_cells},
      {"global_min", report.global_min},
      {"histogram", std::move(hist)},
      {"fractions", std::move(frac)},
      {"final_reba_histogram", std::move(reba_hist)},
      {"argmin_cells", std::move(argmin)},
  };
  if (include_elapsed) doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc;
}

SweepReport sweep_report_from_json(const nlohmann::json& doc, std::string* config_hash) {
  expect_kind(doc, "sweep_report");
  try {
    SweepReport r;
    r.cell_count = doc.at("cell_count").get<std::size_t>();
    r.unreachable_cells = doc.at("unreachable_cells").get<std::size_t>();
    r.global_min = doc.at("global_min").get<int>();
    for (const auto& [k, v] : doc.at("histogram").items()) r.histogram[std::stoi(k)] = v.get<std::size_t>();
    for (const auto& [k, v] : doc.at("fractions").items()) r.fractions[std::stoi(k)] = v.get<double>();
    for (const auto& [k, v] : doc.at("final_reba_histogram").items())
      r.final_reba_histogram[std::stoi(k)] = v.get<std::size_t>();
    for (const auto& c : doc.at("argmin_cells"))
      r.argmin_cells.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
    r.elapsed_seconds = doc.value("elapsed_seconds", 0.0);
    if (config_hash) *config_hash = doc.at("config_hash").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sweep_report: ") + e.what());
  }
}

nlohmann::json pose_to_json(const Pose& pose) {
  const auto arm = [](const ArmPose& a) {
    return nlohmann::json{{"shoulder_flexion", a.shoulder_flexion},
                          {"shoulder_abduction", a.shoulder_abduction},
                          {"upper_arm_rotation", a.upper_arm_rotation},
                          {"elbow_flexion", a.elbow_flexion},
                          {"wrist_flexion", a.wrist_flexion},
                          {"wrist_deviation_or_twist", a.wrist_deviation_or_twist}};
  };
  return {{"trunk_flexion", pose.trunk_flexion}, {"trunk_side", pose.trunk_side},
          {"trunk_twist", pose.trunk_twist},     {"neck_flexion", pose.neck_flexion},
          {"knee_flexion", pose.knee_flexion},   {"bilateral_support", pose.bilateral_support},
          {"left", arm(pose.left)},              {"right", arm(pose.right)}};
}

std::string best_position_csv(const Vec3& p) { return "x,y,z\n" + xyz(p) + "\n"; }

std::string train_summary_csv(const std::vector<RunRecord>& runs) {
  std::string out = "seed,best_postural,steps,x,y,z\n";
  for (const RunRecord& r : runs)
    out += std::to_string(r.seed) + "," + std::to_string(r.best_postural) + "," +
           std::to_string(r.steps) + "," + xyz(r.best_position) + "\n";
  return out;
}

std::string histogram_csv(const SweepReport& report) {
  std::string out = "postural,count,fraction\n";
  for (const auto& [s, n] : report.histogram)
    out += std::to_string(s) + "," + std::to_string(n) + "," + fmt("%.9f", report.fractions.at(s)) + "\n";
  return out;
}

std::string cells_csv(const ScoreField& field) {
  std::string out = "x,y,z,postural,final_reba,reachable\n";
  for (std::size_t n = 0; n < field.cells.size(); ++n) {
    const CellScore& c = field.cells[n];
    out += xyz(field.boundary.position(field.boundary.unlinear(n))) + "," +
           std::to_string(c.postural) + "," + std::to_string(c.final_reba) + "," +
           (c.reachable ? "1" : "0") + "\n";
  }
  return out;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out =
      "start_x,start_y,start_z,optimized_x,optimized_y,optimized_z,baseline_x,baseline_y,"
      "baseline_z,optimized_postural,baseline_postural,optimized_final_reba,baseline_final_reba\n";
  for (const ComparisonRow& r : rows)
    out += xyz(r.start) + "," + xyz(r.optimized_position) + "," + xyz(r.baseline_position) + "," +
           std::to_string(r.optimized_postural) + "," + std::to_string(r.baseline_postural) +
           "," + std::to_string(r.optimized_final_reba) + "," +
           std::to_string(r.baseline_final_reba) + "\n";
  return out;
}

std::string comparison_table(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-30s | %-18s | %-18s\n", "start (x, y, z)",
                "optimized (P / R)", "shortest (P / R)");
  out << line << std::string(72, '-') << "\n";
  for (const ComparisonRow& r : rows) {
    char start[64];
    std::snprintf(start, sizeof start, "(%.3f, %.3f, %.3f)", r.start.x, r.start.y, r.start.z);
    std::snprintf(line, sizeof line, "%-30s | %8d / %-7d | %8d / %-7d\n", start,
                  r.optimized_postural, r.optimized_final_reba, r.baseline_postural,
                  r.baseline_final_reba);
    out << line;
  }
  out << "P = postural score (A + B), R = final REBA\n";
  return out.str();
}

std::string landmarks_csv(const Landmarks& lm) {
  const std::pair<const char*, const Vec3*> rows[] = {
      {"head_top", &lm.head_top},     {"neck_base", &lm.neck_base},
      {"shoulder_l", &lm.shoulder_l}, {"shoulder_r", &lm.shoulder_r},
      {"elbow_l", &lm.elbow_l},       {"elbow_r", &lm.elbow_r},
      {"wrist_l", &lm.wrist_l},       {"wrist_r", &lm.wrist_r},
      {"hand_l", &lm.hand_l},         {"hand_r", &lm.hand_r},
      {"hip_center", &lm.hip_center}, {"knee_l", &lm.knee_l},
      {"knee_r", &lm.knee_r}};
  std::string out = "landmark,x,y,z\n";
  for (const auto& [name, p] : rows) out += std::string(name) + "," + xyz(*p) + "\n";
  return out;
}

Vec3 read_best_position_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open optimum file '" + path + "'");
  std::string header, row;
  std::getline(in, header);
  if (header != "x,y,z" || !std::getline(in, row))
    throw ConfigError(path + ": expected a best-position CSV with header 'x,y,z'");
  return parse_point(path, row);
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace handover
