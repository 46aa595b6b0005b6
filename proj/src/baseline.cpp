#include "handover/baseline.hpp"

#include <stdexcept>

namespace handover {

GridIndex shortest_distance_target(const Vec3& start, const Boundary& boundary) {
  if (!is_finite(start)) throw std::invalid_argument("start point must be finite");
  return boundary.nearest_cell(start);
}

}  // namespace handover
