#include "handover/reba.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace handover::reba {
namespace {

// [neck-1][trunk-1][legs-1]
constexpr int kTableA[3][5][4] = {
    {{1, 2, 3, 4}, {2, 3, 4, 5}, {2, 4, 5, 6}, {3, 5, 6, 7}, {4, 6, 7, 8}},
    {{1, 2, 3, 4}, {3, 4, 5, 6}, {4, 5, 6, 7}, {5, 6, 7, 8}, {6, 7, 8, 9}},
    {{3, 3, 5, 6}, {4, 5, 6, 7}, {5, 6, 7, 8}, {6, 7, 8, 9}, {7, 8, 9, 9}},
};

// [lower_arm-1][upper_arm-1][wrist-1]
constexpr int kTableB[2][6][3] = {
    {{1, 2, 2}, {1, 2, 3}, {3, 4, 5}, {4, 5, 5}, {6, 7, 8}, {7, 8, 8}},
    {{1, 2, 3}, {2, 3, 4}, {4, 5, 5}, {5, 6, 7}, {7, 8, 8}, {8, 9, 9}},
};

// [score_a-1][score_b-1]
constexpr int kTableC[12][12] = {
    {1, 1, 1, 2, 3, 3, 4, 5, 6, 7, 7, 7},
    {1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 7, 8},
    {2, 3, 3, 3, 4, 5, 6, 7, 7, 8, 8, 8},
    {3, 4, 4, 4, 5, 6, 7, 8, 8, 9, 9, 9},
    {4, 4, 4, 5, 6, 7, 8, 8, 9, 9, 9, 9},
    {6, 6, 6, 7, 8, 8, 9, 9, 10, 10, 10, 10},
    {7, 7, 7, 8, 9, 9, 9, 10, 10, 11, 11, 11},
    {8, 8, 8, 9, 10, 10, 10, 10, 10, 11, 11, 11},
    {9, 9, 9, 10, 10, 10, 11, 11, 11, 12, 12, 12},
    {10, 10, 10, 11, 11, 11, 11, 12, 12, 12, 12, 12},
    {11, 11, 11, 11, 12, 12, 12, 12, 12, 12, 12, 12},
    {12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12},
};

void check_index(const char* table, const char* name, int v, int hi) {
  if (v < 1 || v > hi)
    throw std::out_of_range(std::string(table) + ": " + name + " index " + std::to_string(v) +
                            " outside 1.." + std::to_string(hi));
}

}  // namespace

int band_trunk(double flexion, bool twisted_or_side) {
  int score;
  if (flexion == 0.0)
    score = 1;
  else if (flexion > 0.0)
    score = flexion < 20.0 ? 2 : (flexion < 60.0 ? 3 : 4);
  else
    score = -flexion < 20.0 ? 2 : 3;
  return std::min(score + (twisted_or_side ? 1 : 0), 5);
}

int band_neck(double flexion, bool twisted_or_side) {
  const int score = (flexion >= 0.0 && flexion < 20.0) ? 1 : 2;
  return std::min(score + (twisted_or_side ? 1 : 0), 3);
}

int band_legs(bool bilateral_support, double knee_flexion) {
  int score = bilateral_support ? 1 : 2;
  if (knee_flexion >= 60.0)
    score += 2;
  else if (knee_flexion >= 30.0)
    score += 1;
  return std::min(score, 4);
}

int band_upper_arm(double flexion, bool abducted_or_rotated, bool shoulder_raised,
                   bool supported) {
  int score;
  if (flexion > -20.0 && flexion < 20.0)
    score = 1;
  else if (flexion <= -20.0 || flexion < 45.0)
    score = 2;
  else if (flexion < 90.0)
    score = 3;
  else
    score = 4;
  score += (abducted_or_rotated ? 1 : 0) + (shoulder_raised ? 1 : 0) - (supported ? 1 : 0);
  return std::clamp(score, 1, 6);
}

int band_lower_arm(double elbow_flexion) {
  return (elbow_flexion >= 60.0 && elbow_flexion < 100.0) ? 1 : 2;
}

int band_wrist(double flexion, bool deviated_or_twisted) {
  const int score = std::abs(flexion) < 15.0 ? 1 : 2;
  return score + (deviated_or_twisted ? 1 : 0);
}

int table_a(int neck, int trunk, int legs) {
  check_index("table A", "neck", neck, 3);
  check_index("table A", "trunk", trunk, 5);
  check_index("table A", "legs", legs, 4);
  return kTableA[neck - 1][trunk - 1][legs - 1];
}

int table_b(int upper_arm, int lower_arm, int wrist) {
  check_index("table B", "upper arm", upper_arm, 6);
  check_index("table B", "lower arm", lower_arm, 2);
  check_index("table B", "wrist", wrist, 3);
  return kTableB[lower_arm - 1][upper_arm - 1][wrist - 1];
}

int table_c(int score_a, int score_b) {
  check_index("table C", "score A", score_a, 12);
  check_index("table C", "score B", score_b, 12);
  return kTableC[score_a - 1][score_b - 1];
}

void TaskAdjustments::validate() const {
  const auto in_range = [](int v) { return v >= 0 && v <= 3; };
  if (!in_range(load)) throw std::invalid_argument("load score must lie in 0..3");
  if (!in_range(coupling)) throw std::invalid_argument("coupling score must lie in 0..3");
  if (!in_range(activity)) throw std::invalid_argument("activity score must lie in 0..3");
}

RebaBreakdown score_pose(const Pose& pose, const TaskAdjustments& adj) {
  adj.validate();
  RebaBreakdown b;
  const bool trunk_twisted = std::abs(pose.trunk_side) >= kTrunkTwistThreshold ||
                             std::abs(pose.trunk_twist) >= kTrunkTwistThreshold;
  b.trunk = band_trunk(pose.trunk_flexion, trunk_twisted);
  b.neck = band_neck(pose.neck_flexion, pose.neck_twist_or_side);
  b.legs = band_legs(pose.bilateral_support, pose.knee_flexion);
  b.table_a = table_a(b.neck, b.trunk, b.legs);
  b.score_a = b.table_a + adj.load;

  const auto arm_scores = [](const ArmPose& a, int& upper, int& lower, int& wrist) {
    upper = band_upper_arm(a.shoulder_flexion, a.shoulder_abduction >= kAbductionThreshold,
                           a.shoulder_raised, a.arm_supported);
    lower = band_lower_arm(a.elbow_flexion);
    wrist = band_wrist(a.wrist_flexion, a.wrist_deviation_or_twist);
    return table_b(upper, lower, wrist);
  };
  b.table_b_l = arm_scores(pose.left, b.upper_arm_l, b.lower_arm_l, b.wrist_l);
  b.table_b_r = arm_scores(pose.right, b.upper_arm_r, b.lower_arm_r, b.wrist_r);
  b.score_b = std::max(b.table_b_l, b.table_b_r) + adj.coupling;

  b.table_c = table_c(b.score_a, b.score_b);
  b.activity = adj.activity;
  b.final_reba = b.table_c + b.activity;
  b.postural = b.score_a + b.score_b;
  return b;
}

nlohmann::json to_json(const RebaBreakdown& b) {
  return {
      {"trunk", b.trunk},
      {"neck", b.neck},
      {"legs", b.legs},
      {"upper_arm", {{"left", b.upper_arm_l}, {"right", b.upper_arm_r}}},
      {"lower_arm", {{"left", b.lower_arm_l}, {"right", b.lower_arm_r}}},
      {"wrist", {{"left", b.wrist_l}, {"right", b.wrist_r}}},
      {"table_a", b.table_a},
      {"table_b", {{"left", b.table_b_l}, {"right", b.table_b_r}}},
      {"score_a", b.score_a},
      {"score_b", b.score_b},
      {"table_c", b.table_c},
      {"activity", b.activity},
      {"final_reba", b.final_reba},
      {"postural", b.postural},
  };
}

}  // namespace handover::reba
