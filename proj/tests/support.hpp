#pragma once

// Helpers shared by the unit test binaries. Oracles here must stay
// independent of the code paths they check: they only scan, sum, or
// brute-force.

#include <cmath>
#include <random>
#include <vector>

#include "geometry.hpp"

namespace testsupport {

// Random convex descending chain: strictly increasing negative slopes,
// shifted so the last vertex lands exactly on the x-axis.
inline bidisk::geom::ConcaveRegion random_region(std::mt19937_64& rng) {
  using bidisk::geom::Vec2;
  std::uniform_real_distribution<double> width(0.1, 1.0);
  std::uniform_real_distribution<double> steep(0.0, 2.5);
  std::uniform_real_distribution<double> relax(0.35, 0.9);
  const int m = 2 + static_cast<int>(rng() % 30);

  double slope = -std::exp(steep(rng));
  std::vector<double> dxs(static_cast<std::size_t>(m));
  std::vector<double> slopes(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    dxs[static_cast<std::size_t>(i)] = width(rng);
    slopes[static_cast<std::size_t>(i)] = slope;
    slope *= relax(rng);
  }

  double y0 = 0.0;
  for (int i = 0; i < m; ++i) {
    y0 -= dxs[static_cast<std::size_t>(i)] * slopes[static_cast<std::size_t>(i)];
  }
  std::vector<Vec2> vs{{0.0, y0}};
  double x = 0.0;
  double y = y0;
  for (int i = 0; i < m; ++i) {
    x += dxs[static_cast<std::size_t>(i)];
    y += dxs[static_cast<std::size_t>(i)] * slopes[static_cast<std::size_t>(i)];
    vs.push_back({x, y});
  }
  vs.back().y = 0.0;
  return bidisk::geom::ConcaveRegion::from_vertices(std::move(vs));
}

}  // namespace testsupport
