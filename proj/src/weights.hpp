#pragma once

#include <vector>

#include "geometry.hpp"

namespace bidisk::weights {

// Size of the largest axis-aligned right isoceles triangle {x + y <= a} that
// fits under the chain of r: the minimum of x + y over the chain, together
// with the contact vertex range.
geom::MinResult largest_triangle(const geom::ConcaveRegion& r);

// Residual regions after removing that triangle from r. The part above the
// contact is normalized back onto the axes by (x, y) -> (x, x + y - a), the
// part beyond it by (x, y) -> (x + y - a, y); both maps are unimodular, so
// areas and convexity are preserved. Children with area below tol::kMinArea
// are dropped, so the result holds zero, one, or two regions.
std::vector<geom::ConcaveRegion> split_off_triangle(const geom::ConcaveRegion& r,
                                                    const geom::MinResult& contact);

// Greedy triangle-weight sequence of a region: repeatedly take the region
// with the largest inscribed-triangle size from a max-priority queue, emit
// that size, and enqueue its two residuals. Ties are broken toward the
// earlier-created region, so the output is deterministic. Stops after `count`
// weights, when the queue empties, or when the largest remaining weight falls
// below min_weight. The emitted sequence is nonincreasing and the sum of
// w_i^2 / 2 never exceeds the region area (and converges to it).
std::vector<double> weight_sequence(const geom::ConcaveRegion& r, int count,
                                    double min_weight = 0.0);

}  // namespace bidisk::weights
