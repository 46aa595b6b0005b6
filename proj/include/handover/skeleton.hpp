#pragma once

#include <map>
#include <string>

#include "handover/geometry.hpp"

namespace handover {

/// Body dimensions in meters. `trunk` runs from the hip center to the
/// shoulder line, `neck` from the shoulder line to the top of the head.
struct Anthropometry {
  double height = 1.75;
  double shoulder_width = 0.259 * 1.75;
  double upper_arm = 0.186 * 1.75;
  double forearm = 0.146 * 1.75;
  double hand = 0.108 * 1.75;
  double trunk = 0.288 * 1.75;
  double neck = 0.182 * 1.75;
  double hip_height = 0.530 * 1.75;
  double knee_height = 0.285 * 1.75;

  double arm_reach() const { return upper_arm + forearm + hand; }
  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

/// Segment-ratio defaults scaled to a total stature.
Anthropometry anthropometry_from_height(double height);

/// Builds an anthropometry from `key -> meters` pairs whose keys are the
/// field names. Missing fields come from the height ratios; a missing neck
/// is the remainder height - hip_height - trunk.
Anthropometry anthropometry_from_values(const std::map<std::string, double>& values);

/// Reads a plain `key = value` file (blank lines and `#` comments ignored).
Anthropometry load_anthropometry(const std::string& path);

enum class Side { Left, Right };

/// +1 for the right side (positive x), -1 for the left.
constexpr double side_sign(Side s) { return s == Side::Right ? 1.0 : -1.0; }

/// Joint angles of one arm, degrees.
struct ArmPose {
  double shoulder_flexion = 0.0;    // sagittal elevation, + forward
  double shoulder_abduction = 0.0;  // + away from the midline
  double upper_arm_rotation = 0.0;  // swivel of the elbow plane about the humerus
  double elbow_flexion = 0.0;       // 0 = straight
  double wrist_flexion = 0.0;
  bool wrist_deviation_or_twist = false;
  bool shoulder_raised = false;
  bool arm_supported = false;

  bool operator==(const ArmPose&) const = default;
};

struct Pose {
  double trunk_flexion = 0.0;  // + forward
  double trunk_side = 0.0;     // + toward the right
  double trunk_twist = 0.0;    // + chest turns toward the right
  double neck_flexion = 0.0;
  bool neck_twist_or_side = false;
  ArmPose left;
  ArmPose right;
  double knee_flexion = 0.0;
  bool bilateral_support = true;

  const ArmPose& arm(Side s) const { return s == Side::Right ? right : left; }
  ArmPose& arm(Side s) { return s == Side::Right ? right : left; }

  /// Throws std::invalid_argument on non-finite or out-of-range angles.
  void validate() const;
  bool operator==(const Pose&) const = default;
};

Pose neutral_pose();

/// Reflection across the sagittal (x = 0) plane.
Pose mirrored(const Pose& pose);

/// Landmarks in the body-local frame: origin on the floor under the hip
/// center, x lateral right, y up, z forward.
struct Landmarks {
  Vec3 head_top;
  Vec3 neck_base;
  Vec3 shoulder_l, shoulder_r;
  Vec3 elbow_l, elbow_r;
  Vec3 wrist_l, wrist_r;
  Vec3 hand_l, hand_r;
  Vec3 hip_center;
  Vec3 knee_l, knee_r;

  const Vec3& shoulder(Side s) const { return s == Side::Right ? shoulder_r : shoulder_l; }
  const Vec3& elbow(Side s) const { return s == Side::Right ? elbow_r : elbow_l; }
  const Vec3& wrist(Side s) const { return s == Side::Right ? wrist_r : wrist_l; }
  const Vec3& hand(Side s) const { return s == Side::Right ? hand_r : hand_l; }

  bool operator==(const Landmarks&) const = default;
};

Landmarks mirrored(const Landmarks& lm);

/// Orientation of the trunk relative to the pelvis frame.
Mat3 trunk_rotation(double flexion_deg, double side_deg, double twist_deg);

/// Height of the hip center for a symmetric squat with the given knee flexion.
double hip_center_height(const Anthropometry& anthro, double knee_flexion_deg);

/// Shoulder joint position for a trunk posture.
Vec3 shoulder_position(const Anthropometry& anthro, const Mat3& trunk, double hip_y, Side side);

/// Upper-arm direction and elbow-bend reference direction in the trunk frame.
struct ArmFrame {
  Vec3 upper;      // unit vector shoulder -> elbow
  Vec3 bend_ref;   // unit, perpendicular to `upper`; zero-rotation bend direction
};
ArmFrame arm_frame(double flexion_deg, double abduction_deg, Side side);

Landmarks forward_kinematics(const Anthropometry& anthro, const Pose& pose);

}  // namespace handover
