#pragma once

#include <vector>

namespace bidisk::geom {

// Tolerances shared by the geometric routines. Chain-shape tolerances
// (kDuplicate, kEndpointSnap, kConvexSlack) are relative to the largest
// coordinate magnitude of the chain; kContact is an absolute slack on
// linear-functional values, which is adequate because every caller works at
// O(1) coordinate scale.
namespace tol {
inline constexpr double kDuplicate = 1e-12;
inline constexpr double kEndpointSnap = 1e-9;
inline constexpr double kConvexSlack = 1e-9;
inline constexpr double kContact = 1e-9;
inline constexpr double kMinArea = 1e-12;
}  // namespace tol

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Minimum of a positive linear functional over a boundary chain, together
// with the contiguous vertex index range [first, last] attaining it within
// tol::kContact.
struct MinResult {
  double value = 0.0;
  int first = 0;
  int last = 0;
};

// Region enclosed by the coordinate axes and a convex vertex chain descending
// from the positive y-axis to the positive x-axis. Chains are stored with
// nondecreasing x and nonincreasing y (no repeated vertices), so the region is
// exactly { (x, y) : 0 <= x, 0 <= y <= chain height at x }.
class ConcaveRegion {
 public:
  // Validates and adopts a boundary chain. Requirements: at least two
  // vertices, finite coordinates, first vertex on the y-axis and last on the
  // x-axis (within tol::kEndpointSnap relative slack, then snapped exactly),
  // monotone steps (sub-tolerance reversals are snapped, genuine ones
  // rejected), convex turning within tol::kConvexSlack, and positive area.
  // Consecutive vertices that coincide within tol::kDuplicate are merged.
  // Throws std::invalid_argument when a requirement fails.
  static ConcaveRegion from_vertices(std::vector<Vec2> chain);

  // Right triangle with horizontal leg a and vertical leg b, both positive:
  // the chain is the single segment from (0, b) to (a, 0).
  static ConcaveRegion triangle(double a, double b);

  // Chain of `segments` chords inscribed in the curve
  //   alpha -> (2 sin(a/2) - a cos(a/2), 2 sin(a/2) + (2pi - a) cos(a/2))
  // for alpha in [0, 2pi], sampled at alpha_i = pi(1 - cos(pi i / segments)).
  // The parameter grid clusters near the endpoints, where the curve meets the
  // axes tangentially. The upper half of the chain is the exact x<->y mirror
  // of the lower half, matching the symmetry of the curve itself.
  static ConcaveRegion omega0(int segments);

  const std::vector<Vec2>& chain() const { return chain_; }
  double area() const { return area_; }

  // Minimum of cx*x + cy*y over the chain (both coefficients positive). For a
  // convex chain the vertex values descend and then ascend, so the valley is
  // located by bisection on the difference sign, guarded by a short local
  // scan, and widened over ties within tol::kContact.
  MinResult min_functional(double cx, double cy) const;

  // True when p lies in the region enlarged by `slack` on every side; a
  // negative slack demands an interior margin of |slack|.
  bool contains_point(Vec2 p, double slack) const;

 private:
  ConcaveRegion() = default;

  std::vector<Vec2> chain_;
  double area_ = 0.0;
};

// Point of the bidisk boundary curve at parameter alpha in [0, 2pi].
Vec2 omega0_point(double alpha);

}  // namespace bidisk::geom
