#pragma once

#include <vector>

#include "slnet/types.hpp"

namespace slnet {

inline std::vector<double> default_confmap_sigmas() { return {2.0, 3.0, 4.0}; }

// Encodes point annotations into Gaussian supervision maps. Each annotation
// stamps G(i,j) = exp(-((i-i0)^2 + (j-j0)^2) / (2 sigma_cls^2)) onto its
// (class, frame) plane, truncated to a 3-sigma disk; overlapping stamps
// combine by elementwise maximum so peaks stay exactly 1 at annotated pixels.
// sigmas are per-class widths in grid pixels; their count fixes C_cls.
ConfMap encode_confmap(const std::vector<ObjectAnnotation>& annotations, std::size_t window,
                       std::size_t grid_size, const std::vector<double>& sigmas);

}  // namespace slnet
