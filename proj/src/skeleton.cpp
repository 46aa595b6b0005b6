#include "handover/skeleton.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "handover/kvfile.hpp"

namespace handover {
namespace {

// Stature fractions for the standard segment proportions.
constexpr double kShoulderWidthRatio = 0.259;
constexpr double kUpperArmRatio = 0.186;
constexpr double kForearmRatio = 0.146;
constexpr double kHandRatio = 0.108;
constexpr double kTrunkRatio = 0.288;
constexpr double kNeckRatio = 0.182;
constexpr double kHipHeightRatio = 0.530;
constexpr double kKneeHeightRatio = 0.285;

// Knee landmarks sit this fraction of the shoulder width off the midline.
constexpr double kKneeOffsetRatio = 0.35;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void validate_arm(const ArmPose& a, const char* side) {
  const std::string p = std::string(side) + ".";
  require(std::isfinite(a.shoulder_flexion), p + "shoulder_flexion must be finite");
  require(std::isfinite(a.shoulder_abduction), p + "shoulder_abduction must be finite");
  require(std::isfinite(a.upper_arm_rotation), p + "upper_arm_rotation must be finite");
  require(std::isfinite(a.elbow_flexion), p + "elbow_flexion must be finite");
  require(std::isfinite(a.wrist_flexion), p + "wrist_flexion must be finite");
  require(a.elbow_flexion >= 0.0 && a.elbow_flexion <= 160.0,
          p + "elbow_flexion must lie in [0, 160] degrees");
}

}  // namespace

void Anthropometry::validate() const {
  const std::array<std::pair<const char*, double>, 9> fields{{
      {"height", height},
      {"shoulder_width", shoulder_width},
      {"upper_arm", upper_arm},
      {"forearm", forearm},
      {"hand", hand},
      {"trunk", trunk},
      {"neck", neck},
      {"hip_height", hip_height},
      {"knee_height", knee_height},
  }};
  for (const auto& [name, v] : fields)
    require(std::isfinite(v) && v > 0.0, std::string(name) + " must be a positive length");
  require(knee_height < hip_height, "knee_height must be below hip_height");
  require(hip_height < height, "hip_height must be below height");
  require(arm_reach() < height, "upper_arm + forearm + hand must be shorter than height");
  require(std::abs(hip_height + trunk + neck - height) <= 1e-6,
          "hip_height + trunk + neck must equal height");
}

Anthropometry anthropometry_from_height(double height) {
  Anthropometry a;
  a.height = height;
  a.shoulder_width = kShoulderWidthRatio * height;
  a.upper_arm = kUpperArmRatio * height;
  a.forearm = kForearmRatio * height;
  a.hand = kHandRatio * height;
  a.trunk = kTrunkRatio * height;
  a.neck = kNeckRatio * height;
  a.hip_height = kHipHeightRatio * height;
  a.knee_height = kKneeHeightRatio * height;
  return a;
}

Anthropometry anthropometry_from_values(const std::map<std::string, double>& values) {
  static const std::array<const char*, 9> known{"height", "shoulder_width", "upper_arm",
                                                "forearm", "hand", "trunk", "neck",
                                                "hip_height", "knee_height"};
  for (const auto& [key, v] : values) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError(key + ": unknown anthropometry field");
  }
  const auto get = [&](const char* key, double fallback) {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  };

  Anthropometry a = anthropometry_from_height(get("height", Anthropometry{}.height));
  a.shoulder_width = get("shoulder_width", a.shoulder_width);
  a.upper_arm = get("upper_arm", a.upper_arm);
  a.forearm = get("forearm", a.forearm);
  a.hand = get("hand", a.hand);
  a.trunk = get("trunk", a.trunk);
  a.hip_height = get("hip_height", a.hip_height);
  a.knee_height = get("knee_height", a.knee_height);
  a.neck = get("neck", a.height - a.hip_height - a.trunk);
  a.validate();
  return a;
}

Anthropometry load_anthropometry(const std::string& path) {
  std::map<std::string, double> values;
  for (const auto& [key, text] : read_key_value_file(path)) values[key] = parse_double(key, text);
  return anthropometry_from_values(values);
}

void Pose::validate() const {
  require(std::isfinite(trunk_flexion) && std::isfinite(trunk_side) && std::isfinite(trunk_twist),
          "trunk angles must be finite");
  require(std::isfinite(neck_flexion), "neck_flexion must be finite");
  require(std::isfinite(knee_flexion), "knee_flexion must be finite");
  require(knee_flexion >= 0.0 && knee_flexion <= 150.0,
          "knee_flexion must lie in [0, 150] degrees");
  validate_arm(left, "left");
  validate_arm(right, "right");
}

Pose neutral_pose() { return Pose{}; }

Pose mirrored(const Pose& pose) {
  Pose m = pose;
  m.trunk_side = -pose.trunk_side;
  m.trunk_twist = -pose.trunk_twist;
  m.left = pose.right;
  m.right = pose.left;
  return m;
}

Landmarks mirrored(const Landmarks& lm) {
  Landmarks m;
  m.head_top = mirror_x(lm.head_top);
  m.neck_base = mirror_x(lm.neck_base);
  m.shoulder_l = mirror_x(lm.shoulder_r);
  m.shoulder_r = mirror_x(lm.shoulder_l);
  m.elbow_l = mirror_x(lm.elbow_r);
  m.elbow_r = mirror_x(lm.elbow_l);
  m.wrist_l = mirror_x(lm.wrist_r);
  m.wrist_r = mirror_x(lm.wrist_l);
  m.hand_l = mirror_x(lm.hand_r);
  m.hand_r = mirror_x(lm.hand_l);
  m.hip_center = mirror_x(lm.hip_center);
  m.knee_l = mirror_x(lm.knee_r);
  m.knee_r = mirror_x(lm.knee_l);
  return m;
}

Mat3 trunk_rotation(double flexion_deg, double side_deg, double twist_deg) {
  // Twist about the spine, then lateral bend, then forward flexion.
  return rot_x(deg2rad(flexion_deg)) * rot_z(-deg2rad(side_deg)) * rot_y(deg2rad(twist_deg));
}

double hip_center_height(const Anthropometry& anthro, double knee_flexion_deg) {
  // Thigh and shank each tilt by half the knee angle, keeping the hip over the feet.
  return anthro.hip_height * std::cos(deg2rad(0.5 * knee_flexion_deg));
}

Vec3 shoulder_position(const Anthropometry& anthro, const Mat3& trunk, double hip_y, Side side) {
  const Vec3 hip{0.0, hip_y, 0.0};
  return hip + trunk * Vec3{side_sign(side) * 0.5 * anthro.shoulder_width, anthro.trunk, 0.0};
}

ArmFrame arm_frame(double flexion_deg, double abduction_deg, Side side) {
  const Mat3 r = rot_x(-deg2rad(flexion_deg)) * rot_z(side_sign(side) * deg2rad(abduction_deg));
  return {r * Vec3{0.0, -1.0, 0.0}, r * Vec3{0.0, 0.0, 1.0}};
}

Landmarks forward_kinematics(const Anthropometry& anthro, const Pose& pose) {
  pose.validate();

  Landmarks lm;
  const double half_knee = deg2rad(0.5 * pose.knee_flexion);
  const double shank = anthro.knee_height;
  const double thigh = anthro.hip_height - anthro.knee_height;
  const double hip_y = hip_center_height(anthro, pose.knee_flexion);
  lm.hip_center = {0.0, hip_y, 0.0};
  const double knee_x = kKneeOffsetRatio * anthro.shoulder_width;
  const Vec3 knee{knee_x, shank * std::cos(half_knee), thigh * std::sin(half_knee)};
  lm.knee_r = knee;
  lm.knee_l = mirror_x(knee);

  const Mat3 trunk = trunk_rotation(pose.trunk_flexion, pose.trunk_side, pose.trunk_twist);
  lm.neck_base = lm.hip_center + trunk * Vec3{0.0, anthro.trunk, 0.0};
  lm.head_top =
      lm.neck_base + trunk * (rot_x(deg2rad(pose.neck_flexion)) * Vec3{0.0, anthro.neck, 0.0});

  for (const Side side : {Side::Left, Side::Right}) {
    const ArmPose& a = pose.arm(side);
    const double s = side_sign(side);
    const ArmFrame frame = arm_frame(a.shoulder_flexion, a.shoulder_abduction, side);
    const Vec3 bend = rotate_about(frame.bend_ref, frame.upper, s * deg2rad(a.upper_arm_rotation));
    const double e = deg2rad(a.elbow_flexion);
    const Vec3 fore = frame.upper * std::cos(e) + bend * std::sin(e);
    const Vec3 fore_perp = frame.upper * -std::sin(e) + bend * std::cos(e);
    const double w = deg2rad(a.wrist_flexion);
    const Vec3 hand_dir = fore * std::cos(w) + fore_perp * std::sin(w);

    const Vec3 shoulder = shoulder_position(anthro, trunk, hip_y, side);
    const Vec3 elbow = shoulder + trunk * frame.upper * anthro.upper_arm;
    const Vec3 wrist = elbow + trunk * fore * anthro.forearm;
    const Vec3 hand = wrist + trunk * hand_dir * anthro.hand;
    if (side == Side::Right) {
      lm.shoulder_r = shoulder, lm.elbow_r = elbow, lm.wrist_r = wrist, lm.hand_r = hand;
    } else {
      lm.shoulder_l = shoulder, lm.elbow_l = elbow, lm.wrist_l = wrist, lm.hand_l = hand;
    }
  }
  return lm;
}

}  // namespace handover
