#include "slnet/geometry.hpp"

#include <cmath>

#include "slnet/errors.hpp"

namespace slnet {

void PolarGrid::validate() const {
  check(range_min >= 0.0 && range_max > range_min, "range extent must satisfy max > min >= 0");
  check(std::abs(azimuth_min + azimuth_max) < 1e-9, "azimuth bounds must be symmetric about 0");
  check(grid_size >= 2, "grid_size must be >= 2");
}

double PolarGrid::range_at(std::size_t range_idx) const {
  return range_min + (range_max - range_min) *
                         (static_cast<double>(range_idx) / static_cast<double>(grid_size - 1));
}

double PolarGrid::azimuth_at(std::size_t azimuth_idx) const {
  return azimuth_min + (azimuth_max - azimuth_min) * (static_cast<double>(azimuth_idx) /
                                                      static_cast<double>(grid_size - 1));
}

void OlsParams::validate() const {
  check(!kappa.empty(), "OLS needs at least one class kappa");
  for (double k : kappa) check(k > 0.0, "kappa must be positive");
}

CartesianPoint grid_to_cartesian(const PolarGrid& grid, std::size_t range_idx,
                                 std::size_t azimuth_idx) {
  check(range_idx < grid.grid_size && azimuth_idx < grid.grid_size,
        "grid index out of bounds");
  double r = grid.range_at(range_idx);
  double theta = grid.azimuth_at(azimuth_idx);
  return {r * std::sin(theta), r * std::cos(theta)};
}

double ols(const GridPoint& first, const GridPoint& second, const PolarGrid& grid,
           const OlsParams& params) {
  check(first.class_id < params.kappa.size(), "no kappa for class of first point");
  CartesianPoint a = grid_to_cartesian(grid, first.range_idx, first.azimuth_idx);
  CartesianPoint b = grid_to_cartesian(grid, second.range_idx, second.azimuth_idx);
  double dx = a.x - b.x, dy = a.y - b.y;
  double d2 = dx * dx + dy * dy;
  double s = grid.range_at(first.range_idx);
  double tol = s * params.kappa[first.class_id];
  return std::exp(-d2 / (2.0 * tol * tol));
}

}  // namespace slnet
