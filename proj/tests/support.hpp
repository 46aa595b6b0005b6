#pragma once

#include <random>

#include "handover/skeleton.hpp"

namespace testing_support {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool coin(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng); }

inline handover::ArmPose random_arm(std::mt19937_64& rng) {
  handover::ArmPose a;
  a.shoulder_flexion = uniform(rng, -60.0, 180.0);
  a.shoulder_abduction = uniform(rng, -30.0, 120.0);
  a.upper_arm_rotation = uniform(rng, -90.0, 90.0);
  a.elbow_flexion = uniform(rng, 0.0, 160.0);
  a.wrist_flexion = uniform(rng, -80.0, 80.0);
  a.wrist_deviation_or_twist = coin(rng);
  a.shoulder_raised = coin(rng);
  a.arm_supported = coin(rng);
  return a;
}

inline handover::Pose random_pose(std::mt19937_64& rng) {
  handover::Pose p;
  p.trunk_flexion = uniform(rng, -30.0, 90.0);
  p.trunk_side = uniform(rng, -30.0, 30.0);
  p.trunk_twist = uniform(rng, -45.0, 45.0);
  p.neck_flexion = uniform(rng, -30.0, 60.0);
  p.neck_twist_or_side = coin(rng);
  p.left = random_arm(rng);
  p.right = random_arm(rng);
  p.knee_flexion = uniform(rng, 0.0, 150.0);
  p.bilateral_support = coin(rng);
  return p;
}

}  // namespace testing_support
