#pragma once

#include <cstddef>
#include <vector>

#include "slnet/types.hpp"

namespace slnet {

// Bird-eye polar grid: H indexes range, W indexes azimuth, both linearly
// interpolated across the stated extents (index 0 -> min, grid_size-1 -> max).
struct PolarGrid {
  double range_min = 1.0;    // meters
  double range_max = 25.0;   // meters
  double azimuth_min = -1.0471975511965976;  // radians (-60 deg)
  double azimuth_max = 1.0471975511965976;   // radians (+60 deg)
  std::size_t grid_size = 128;

  void validate() const;
  double range_at(std::size_t range_idx) const;
  double azimuth_at(std::size_t azimuth_idx) const;
};

struct OlsParams {
  std::vector<double> kappa;  // per-class error tolerance, > 0

  static OlsParams defaults() { return {{0.5, 0.7, 1.0}}; }
  void validate() const;
};

struct CartesianPoint {
  double x = 0.0;  // lateral, meters (positive toward +azimuth)
  double y = 0.0;  // forward, meters
};

CartesianPoint grid_to_cartesian(const PolarGrid& grid, std::size_t range_idx,
                                 std::size_t azimuth_idx);

// A point object on the grid; converts from either detections or annotations
// so OLS is callable on any mix of the two.
struct GridPoint {
  std::size_t class_id = 0;
  std::size_t range_idx = 0;
  std::size_t azimuth_idx = 0;

  GridPoint() = default;
  GridPoint(std::size_t cls, std::size_t range, std::size_t azimuth)
      : class_id(cls), range_idx(range), azimuth_idx(azimuth) {}
  GridPoint(const Detection& d)
      : class_id(d.class_id), range_idx(d.range_idx), azimuth_idx(d.azimuth_idx) {}
  GridPoint(const ObjectAnnotation& a)
      : class_id(a.class_id), range_idx(a.range_idx), azimuth_idx(a.azimuth_idx) {}
};

// Object location similarity: exp(-d^2 / (2 (s * kappa)^2)) with d the
// Cartesian distance in meters, s the range of the first point (the ground
// truth during evaluation, the higher-confidence point during
// post-processing) and kappa the class tolerance of the first point.
double ols(const GridPoint& first, const GridPoint& second, const PolarGrid& grid,
           const OlsParams& params);

}  // namespace slnet
