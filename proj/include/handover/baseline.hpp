#pragma once

#include "handover/task.hpp"

namespace handover {

/// Ergonomically naive comparator: clamp the start point onto the boundary
/// box and snap it to the nearest grid cell.
GridIndex shortest_distance_target(const Vec3& start, const Boundary& boundary);

}  // namespace handover
