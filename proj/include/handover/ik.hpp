#pragma once

#include <array>
#include <optional>

#include "handover/skeleton.hpp"

namespace handover {

/// Hand (grip point) targets in the body-local frame.
struct HandTargets {
  Vec3 left;
  Vec3 right;

  const Vec3& hand(Side s) const { return s == Side::Right ? right : left; }
  bool crossed() const { return left.x > right.x; }
};

struct ArmAngles {
  double shoulder_flexion = 0.0;
  double shoulder_abduction = 0.0;
  double upper_arm_rotation = 0.0;
  double elbow_flexion = 0.0;
};

/// Analytic two-bone solve with the shoulder in an upright trunk frame.
/// The elbow is swung toward a down/outward pole. Returns nullopt when
/// |target - shoulder| is outside [|upper - fore|, upper + fore].
std::optional<ArmAngles> two_bone_ik(const Vec3& shoulder, const Vec3& target, double upper,
                                     double fore, Side side = Side::Right);

/// Same solve for a shoulder-relative target already expressed in the trunk frame.
std::optional<ArmAngles> two_bone_ik_local(const Vec3& offset, double upper, double fore,
                                           Side side);

/// Search limits for the reach cascade (degrees).
struct ReachLimits {
  int trunk_flexion = 60;
  int trunk_side = 30;
  int trunk_twist = 45;
  int knee_flexion = 150;
  int knee_step = 5;
};

struct ReachSolution {
  Pose pose;
  bool reachable = false;
  std::array<double, 2> residual{};  // meters, {left, right}

  double max_residual() const { return residual[0] > residual[1] ? residual[0] : residual[1]; }
};

/// Places both hands on the targets. Arms first; then the smallest trunk
/// lean on a 1-degree grid (flexion, plus side bend and twist for targets
/// outside the shoulder span); then knee flexion on a coarse grid for targets
/// below hip height. Never throws for finite targets: an unreachable target
/// yields reachable = false and the least-residual pose that was tried.
ReachSolution solve_reach(const Anthropometry& anthro, const HandTargets& targets,
                          const ReachLimits& limits = {});

}  // namespace handover
