#pragma once

#include <string>
#include <vector>

#include "geometry.hpp"

namespace bidisk::svg {

// One labeled polyline of a plot, points in drawing order.
struct Curve {
  std::string label;
  std::vector<geom::Vec2> points;
};

// Standalone SVG document plotting the curves into a fixed 640x480 viewport:
// shared axes fitted to the joint bounding box with 5% padding, one path
// element per curve in input order, a fixed six-color palette cycled by
// index, and a legend in input order. Output is deterministic byte-for-byte:
// no timestamps, coordinates rendered with at most six significant digits.
// Throws std::invalid_argument when the dataset is empty, a curve has fewer
// than two points, or any coordinate is non-finite.
std::string render(const std::vector<Curve>& curves);

}  // namespace bidisk::svg
