#pragma once

#include <json.hpp>

#include "handover/skeleton.hpp"

namespace handover::reba {

// Component bands. Every band is half-open and lower-inclusive: an angle
// sitting exactly on a boundary scores the higher band.
int band_trunk(double flexion_deg, bool twisted_or_side);
int band_neck(double flexion_deg, bool twisted_or_side);
int band_legs(bool bilateral_support, double knee_flexion_deg);
int band_upper_arm(double flexion_deg, bool abducted_or_rotated, bool shoulder_raised,
                   bool supported);
int band_lower_arm(double elbow_flexion_deg);
int band_wrist(double flexion_deg, bool deviated_or_twisted);

// Lookup tables; out-of-range indices throw std::out_of_range.
int table_a(int neck, int trunk, int legs);
int table_b(int upper_arm, int lower_arm, int wrist);
int table_c(int score_a, int score_b);

// Adjustment thresholds applied when banding a Pose.
inline constexpr double kTrunkTwistThreshold = 5.0;   // deg of side bend or twist
inline constexpr double kAbductionThreshold = 20.0;   // deg of shoulder abduction

struct TaskAdjustments {
  int load = 0;      // 0..3
  int coupling = 0;  // 0..3
  int activity = 0;  // 0..3

  /// Throws std::invalid_argument when a score is outside 0..3.
  void validate() const;
};

struct RebaBreakdown {
  int trunk = 1;
  int neck = 1;
  int legs = 1;
  int upper_arm_l = 1, upper_arm_r = 1;
  int lower_arm_l = 1, lower_arm_r = 1;
  int wrist_l = 1, wrist_r = 1;
  int table_a = 1;
  int table_b_l = 1, table_b_r = 1;
  int score_a = 1;
  int score_b = 1;
  int table_c = 1;
  int activity = 0;
  int final_reba = 1;
  int postural = 2;  // score_a + score_b

  bool operator==(const RebaBreakdown&) const = default;
};

RebaBreakdown score_pose(const Pose& pose, const TaskAdjustments& adj = {});

nlohmann::json to_json(const RebaBreakdown& b);

}  // namespace handover::reba
