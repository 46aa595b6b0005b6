#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "handover/ik.hpp"
#include "handover/reba.hpp"
#include "handover/skeleton.hpp"

namespace handover {

/// Integer cell coordinates of the handover midpoint.
struct GridIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  bool operator==(const GridIndex&) const = default;
  auto operator<=>(const GridIndex&) const = default;
};

/// Axis-aligned search region sampled at a fixed step (meters). Cells on
/// the lateral (x) axis are centered on the box so the grid is mirror
/// symmetric; y and z cells start at the lower corner.
class Boundary {
 public:
  /// Shoulder width in x, knee height to the top of the head in y, and
  /// zero to full arm reach in z.
  static Boundary from_anthropometry(const Anthropometry& anthro, double step);
  /// Arbitrary box; max == min on an axis gives a single cell along it.
  static Boundary box(const Vec3& min, const Vec3& max, double step);

  const Vec3& min() const { return min_; }
  const Vec3& max() const { return max_; }
  double step() const { return step_; }
  const std::array<int, 3>& counts() const { return counts_; }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(counts_[0]) * counts_[1] * counts_[2];
  }

  bool contains(const GridIndex& g) const {
    return g.i >= 0 && g.j >= 0 && g.k >= 0 && g.i < counts_[0] && g.j < counts_[1] &&
           g.k < counts_[2];
  }
  bool contains(const Vec3& p, double tol = 1e-9) const;
  Vec3 position(const GridIndex& g) const {
    return {center_x_ + (g.i - 0.5 * (counts_[0] - 1)) * step_, min_.y + g.j * step_,
            min_.z + g.k * step_};
  }
  GridIndex center() const { return {counts_[0] / 2, counts_[1] / 2, counts_[2] / 2}; }
  /// Nearest cell to a point inside the box (coordinates are clamped first).
  GridIndex nearest_cell(const Vec3& p) const;

  std::size_t linear(const GridIndex& g) const {
    return (static_cast<std::size_t>(g.i) * counts_[1] + g.j) * counts_[2] + g.k;
  }
  GridIndex unlinear(std::size_t n) const {
    const auto nz = static_cast<std::size_t>(counts_[2]);
    const auto ny = static_cast<std::size_t>(counts_[1]);
    return {static_cast<int>(n / (ny * nz)), static_cast<int>((n / nz) % ny),
            static_cast<int>(n % nz)};
  }

  bool operator==(const Boundary&) const = default;

 private:
  Boundary(const Vec3& min, const Vec3& max, double step);

  Vec3 min_;
  Vec3 max_;
  double center_x_ = 0.0;
  double step_ = 0.0;
  std::array<int, 3> counts_{};
};

/// Box carried with both hands on lateral handles; the optimized state is
/// the midpoint between the handles.
struct BoxSpec {
  double handle_separation = 0.40;

  HandTargets targets(const Vec3& midpoint) const {
    const Vec3 half{0.5 * handle_separation, 0.0, 0.0};
    return {midpoint - half, midpoint + half};
  }
};

/// Everything needed to score a handover midpoint.
struct HandoverTask {
  Anthropometry anthro;
  Boundary boundary = Boundary::from_anthropometry(Anthropometry{}, 0.02);
  BoxSpec box;
  reba::TaskAdjustments adjustments;
  ReachLimits limits;
};

struct CellScore {
  std::int16_t postural = 0;
  std::int16_t final_reba = 0;
  bool reachable = false;

  bool operator==(const CellScore&) const = default;
};

struct PointEvaluation {
  ReachSolution reach;
  reba::RebaBreakdown breakdown;
};

PointEvaluation evaluate_point(const HandoverTask& task, const Vec3& midpoint);
CellScore evaluate_cell(const HandoverTask& task, const GridIndex& cell);

}  // namespace handover
