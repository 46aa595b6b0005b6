#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "handover/experiment.hpp"
#include "handover/oracle.hpp"
#include "handover/qlearning.hpp"

namespace handover {

inline constexpr int kSchemaVersion = 1;

nlohmann::json run_record_to_json(const RunRecord& run, const std::string& config_hash);
/// Throws ConfigError when the document is not a run record of this schema.
RunRecord run_record_from_json(const nlohmann::json& doc, std::string* config_hash = nullptr);

nlohmann::json sweep_report_to_json(const SweepReport& report, const Boundary& boundary,
                                    const std::string& config_hash, bool include_elapsed = true);
/// Reads back the fields needed for verification (minimum, argmin, histogram).
SweepReport sweep_report_from_json(const nlohmann::json& doc, std::string* config_hash = nullptr);

nlohmann::json pose_to_json(const Pose& pose);

// CSV renderers. Coordinates are meters (one engine unit = one meter).
std::string best_position_csv(const Vec3& p);
std::string train_summary_csv(const std::vector<RunRecord>& runs);
std::string histogram_csv(const SweepReport& report);
std::string cells_csv(const ScoreField& field);
std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_table(const std::vector<ComparisonRow>& rows);
std::string landmarks_csv(const Landmarks& lm);

/// Reads the first data row of a best-position CSV.
Vec3 read_best_position_csv(const std::string& path);

/// Writes through a temporary file and renames it into place.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace handover
