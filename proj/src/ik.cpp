#include "handover/ik.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace handover {
namespace {

constexpr double kMaxElbowFlexion = 160.0;
constexpr double kReachTolerance = 1e-12;

// Elbow pole: the elbow swings down and slightly outward.
Vec3 elbow_pole(Side side) { return normalized(Vec3{side_sign(side) * 0.4, -1.0, 0.0}); }

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

struct ArmReach {
  double min_distance;  // elbow at its flexion limit
  double max_distance;  // straight arm
};

ArmReach arm_reach(const Anthropometry& a) {
  const double upper = a.upper_arm;
  const double fore = a.forearm + a.hand;
  const double c = std::cos(deg2rad(kMaxElbowFlexion));
  return {std::sqrt(upper * upper + fore * fore + 2.0 * upper * fore * c), upper + fore};
}

struct TrunkCandidate {
  int flexion = 0;
  int side = 0;
  int twist = 0;
  int knee = 0;

  int trunk_cost() const { return std::abs(flexion) + std::abs(side) + std::abs(twist); }
};

struct CandidateFit {
  Mat3 trunk;
  double hip_y = 0.0;
  std::array<Vec3, 2> offset{};  // shoulder -> target in the trunk frame, {left, right}
  double excess = 0.0;           // worst distance outside the reachable shell
};

// Upright-lateral trunk rotations are reused across every call.
const Mat3& flexion_only_rotation(int flexion) {
  static const std::vector<Mat3> table = [] {
    std::vector<Mat3> t;
    for (int f = 0; f <= 180; ++f) t.push_back(trunk_rotation(f, 0.0, 0.0));
    return t;
  }();
  return table[static_cast<std::size_t>(flexion)];
}

CandidateFit fit(const Anthropometry& anthro, const HandTargets& targets, const ArmReach& reach,
                 const TrunkCandidate& c) {
  CandidateFit f;
  f.trunk = (c.side == 0 && c.twist == 0 && c.flexion >= 0 && c.flexion <= 180)
                ? flexion_only_rotation(c.flexion)
                : trunk_rotation(c.flexion, c.side, c.twist);
  f.hip_y = hip_center_height(anthro, c.knee);
  const Mat3 inv = f.trunk.transposed();
  for (const Side side : {Side::Left, Side::Right}) {
    const Vec3 shoulder = shoulder_position(anthro, f.trunk, f.hip_y, side);
    const Vec3 local = inv * (targets.hand(side) - shoulder);
    const double d = norm(local);
    const double excess = std::max({d - reach.max_distance, reach.min_distance - d, 0.0});
    f.offset[side == Side::Right ? 1 : 0] = local;
    f.excess = std::max(f.excess, excess);
  }
  return f;
}

bool fits(const CandidateFit& f) { return f.excess <= kReachTolerance; }

Pose build_pose(const Anthropometry& anthro, const TrunkCandidate& c, const CandidateFit& f,
                const ArmReach& reach) {
  Pose pose = neutral_pose();
  pose.trunk_flexion = c.flexion;
  pose.trunk_side = c.side;
  pose.trunk_twist = c.twist;
  pose.knee_flexion = c.knee;
  const double upper = anthro.upper_arm;
  const double fore = anthro.forearm + anthro.hand;
  for (const Side side : {Side::Left, Side::Right}) {
    Vec3 offset = f.offset[side == Side::Right ? 1 : 0];
    const double d = norm(offset);
    const double clamped = std::clamp(d, reach.min_distance, reach.max_distance);
    if (d > 0.0 && clamped != d) offset = offset * (clamped / d);
    if (d == 0.0) offset = Vec3{0.0, -reach.min_distance, 0.0};
    auto angles = two_bone_ik_local(offset, upper, fore, side);
    ArmPose& arm = pose.arm(side);
    if (angles) {
      arm.shoulder_flexion = angles->shoulder_flexion;
      arm.shoulder_abduction = angles->shoulder_abduction;
      arm.upper_arm_rotation = angles->upper_arm_rotation;
      arm.elbow_flexion = std::min(angles->elbow_flexion, kMaxElbowFlexion);
    }
  }
  return pose;
}

}  // namespace

std::optional<ArmAngles> two_bone_ik_local(const Vec3& offset, double upper, double fore,
                                           Side side) {
  const double d = norm(offset);
  const double lo = std::abs(upper - fore);
  const double hi = upper + fore;
  if (!(d > 0.0) || d < lo * (1.0 - kReachTolerance) || d > hi * (1.0 + kReachTolerance))
    return std::nullopt;

  const double s = side_sign(side);
  const double cos_elbow = clamp_unit((d * d - upper * upper - fore * fore) / (2.0 * upper * fore));
  const double cos_shoulder = clamp_unit((upper * upper + d * d - fore * fore) / (2.0 * upper * d));
  const double elbow = std::acos(cos_elbow);
  const double beta = std::acos(cos_shoulder);

  const Vec3 dir = offset * (1.0 / d);
  Vec3 pole = elbow_pole(side);
  Vec3 pole_perp = pole - dir * dot(pole, dir);
  if (norm(pole_perp) < 1e-9) {
    pole = Vec3{0.0, 0.0, -1.0};
    pole_perp = pole - dir * dot(pole, dir);
  }
  pole_perp = normalized(pole_perp);
  const Vec3 u = dir * std::cos(beta) + pole_perp * std::sin(beta);

  ArmAngles out;
  out.shoulder_abduction = rad2deg(std::asin(clamp_unit(s * u.x)));
  out.shoulder_flexion = rad2deg(std::atan2(u.z, -u.y));
  out.elbow_flexion = rad2deg(elbow);

  const double sin_elbow = std::sin(elbow);
  if (sin_elbow > 1e-12) {
    const ArmFrame frame = arm_frame(out.shoulder_flexion, out.shoulder_abduction, side);
    const Vec3 f = normalized(offset - frame.upper * upper);
    const Vec3 bend = normalized(f - frame.upper * dot(f, frame.upper));
    const double signed_angle =
        std::atan2(dot(cross(frame.bend_ref, bend), frame.upper), dot(frame.bend_ref, bend));
    out.upper_arm_rotation = s * rad2deg(signed_angle);
  }
  return out;
}

std::optional<ArmAngles> two_bone_ik(const Vec3& shoulder, const Vec3& target, double upper,
                                     double fore, Side side) {
  return two_bone_ik_local(target - shoulder, upper, fore, side);
}

ReachSolution solve_reach(const Anthropometry& anthro, const HandTargets& targets,
                          const ReachLimits& limits) {
  const ArmReach reach = arm_reach(anthro);

  bool have_best = false;
  TrunkCandidate best;
  CandidateFit best_fit;
  bool found = false;

  const auto consider = [&](const TrunkCandidate& c) {
    CandidateFit f = fit(anthro, targets, reach, c);
    if (fits(f)) {
      best = c, best_fit = f, found = true;
      return true;
    }
    if (!have_best || f.excess < best_fit.excess ||
        (f.excess == best_fit.excess && c.trunk_cost() < best.trunk_cost())) {
      best = c, best_fit = f, have_best = true;
    }
    return false;
  };

  const Vec3 mid = (targets.left + targets.right) * 0.5;
  const bool lateral = std::abs(mid.x) > 0.5 * anthro.shoulder_width;
  const int toward = mid.x > 0.0 ? 1 : -1;

  // Trunk lean at a fixed knee angle, smallest summed angle first.
  const auto search_trunk = [&](int knee, int start_cost) {
    if (!lateral) {
      for (int f = start_cost; f <= limits.trunk_flexion; ++f)
        if (consider({f, 0, 0, knee})) return true;
      return false;
    }
    const int max_cost = limits.trunk_flexion + limits.trunk_side + limits.trunk_twist;
    for (int cost = start_cost; cost <= max_cost; ++cost) {
      for (int f = 0; f <= std::min(cost, limits.trunk_flexion); ++f) {
        for (int sd = 0; sd <= std::min(cost - f, limits.trunk_side); ++sd) {
          const int tw = cost - f - sd;
          if (tw > limits.trunk_twist) continue;
          if (consider({f, toward * sd, toward * tw, knee})) return true;
        }
      }
    }
    return false;
  };

  if (!consider({}) && !search_trunk(0, 1)) {
    const double lowest = std::min(targets.left.y, targets.right.y);
    if (lowest < anthro.hip_height && limits.knee_step > 0) {
      for (int knee = limits.knee_step; knee <= limits.knee_flexion; knee += limits.knee_step)
        if (search_trunk(knee, 0)) break;
    }
  }

  ReachSolution sol;
  sol.pose = build_pose(anthro, best, best_fit, reach);
  const Landmarks lm = forward_kinematics(anthro, sol.pose);
  sol.residual = {distance(lm.hand_l, targets.left), distance(lm.hand_r, targets.right)};
  sol.reachable = found;
  return sol;
}

}  // namespace handover
