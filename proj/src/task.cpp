#include "handover/task.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace handover {
namespace {

int axis_cells(double extent, double step) {
  // Tolerate representation error when the extent is an exact multiple of the step.
  return static_cast<int>(std::floor(extent / step + 1e-9)) + 1;
}

}  // namespace

Boundary::Boundary(const Vec3& min, const Vec3& max, double step)
    : min_(min), max_(max), center_x_(0.5 * (min.x + max.x)), step_(step) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw std::invalid_argument("boundary step must be positive");
  if (!is_finite(min) || !is_finite(max))
    throw std::invalid_argument("boundary corners must be finite");
  if (max.x < min.x || max.y < min.y || max.z < min.z)
    throw std::invalid_argument("boundary is empty: max must not be below min");
  counts_ = {axis_cells(max.x - min.x, step), axis_cells(max.y - min.y, step),
             axis_cells(max.z - min.z, step)};
}

Boundary Boundary::from_anthropometry(const Anthropometry& anthro, double step) {
  const double half = 0.5 * anthro.shoulder_width;
  const Vec3 lo{-half, anthro.knee_height, 0.0};
  const Vec3 hi{half, anthro.height, anthro.arm_reach()};
  if (!(step > 0.0)) throw std::invalid_argument("boundary step must be positive");
  if (hi.x - lo.x < step || hi.y - lo.y < step || hi.z - lo.z < step)
    throw std::invalid_argument("boundary step exceeds an axis extent");
  return Boundary(lo, hi, step);
}

Boundary Boundary::box(const Vec3& min, const Vec3& max, double step) {
  return Boundary(min, max, step);
}

bool Boundary::contains(const Vec3& p, double tol) const {
  return p.x >= min_.x - tol && p.x <= max_.x + tol && p.y >= min_.y - tol &&
         p.y <= max_.y + tol && p.z >= min_.z - tol && p.z <= max_.z + tol;
}

GridIndex Boundary::nearest_cell(const Vec3& p) const {
  const auto snap = [&](double v, double lo, int n) {
    const long idx = std::lround((v - lo) / step_);
    return static_cast<int>(std::clamp<long>(idx, 0, n - 1));
  };
  const double x0 = center_x_ - 0.5 * (counts_[0] - 1) * step_;
  return {snap(std::clamp(p.x, min_.x, max_.x), x0, counts_[0]),
          snap(std::clamp(p.y, min_.y, max_.y), min_.y, counts_[1]),
          snap(std::clamp(p.z, min_.z, max_.z), min_.z, counts_[2])};
}

PointEvaluation evaluate_point(const HandoverTask& task, const Vec3& midpoint) {
  PointEvaluation e;
  e.reach = solve_reach(task.anthro, task.box.targets(midpoint), task.limits);
  e.breakdown = reba::score_pose(e.reach.pose, task.adjustments);
  return e;
}

CellScore evaluate_cell(const HandoverTask& task, const GridIndex& cell) {
  const PointEvaluation e = evaluate_point(task, task.boundary.position(cell));
  return {static_cast<std::int16_t>(e.breakdown.postural),
          static_cast<std::int16_t>(e.breakdown.final_reba), e.reach.reachable};
}

}  // namespace handover
