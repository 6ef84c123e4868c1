#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bidisk::packing {

namespace tol {
// Two placed pieces are accepted as interior-disjoint when some separating
// axis leaves a penetration of at most this much; boundary contact therefore
// always passes.
inline constexpr double kOverlap = 1e-12;
}  // namespace tol

// Axis-aligned right triangle with horizontal leg a and vertical leg b,
// anchored by its right-angle corner at (x0, y0). Upright pieces span the
// corner plus (x0 + a, y0) and (x0, y0 + b); a rotated piece is the
// half-turn image about its corner, spanning (x0 - a, y0) and (x0, y0 - b).
// Legs are positive either way.
struct PlacedTriangle {
  double a = 0.0;
  double b = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  bool rotated = false;
};

// Open target triangle { x > 0, y > 0, x/c + y/d < 1 } with a containment
// clearance requirement. Margin zero degrades to closed containment, so
// boundary contact passes exactly.
struct TargetTriangle {
  double c = 0.0;
  double d = 0.0;
  double margin = 1e-6;
};

// Lower bound on the legs of one piece. The bound is satisfied by a piece
// whose leg multiset dominates {a, b}: either leg of the piece may cover
// either entry, since a right triangle and its leg-swapped mirror bound the
// same ellipsoid factor.
struct LegRequirement {
  double a = 0.0;
  double b = 0.0;
};

struct TrianglePlacement {
  TargetTriangle target;
  std::vector<PlacedTriangle> pieces;
  std::vector<LegRequirement> required;
};

// One verification defect. Containment and Requirement failures name a single
// piece (piece_b stays -1); Overlap failures name the offending pair.
// Requirement failures with piece_a == -1 report an uncoverable requirement
// rather than a specific piece.
struct Failure {
  enum class Kind { kContainment, kOverlap, kRequirement };
  Kind kind = Kind::kContainment;
  int piece_a = -1;
  int piece_b = -1;
  std::string detail;
};

struct VerifyReport {
  bool ok = false;
  std::vector<Failure> failures;
};

// Checks, in order: every piece vertex clears the target's three sides by at
// least target.margin; all piece pairs are interior-disjoint under a
// separating-axis test with tol::kOverlap; and the requirement list can be
// matched injectively to pieces whose legs dominate it (exact comparison, no
// tolerance). The result is independent of the order of pieces and of
// requirements, except that failure records use the caller's indices.
// Throws std::invalid_argument on malformed input (non-finite numbers,
// non-positive legs or target sides, negative margin, no pieces).
VerifyReport verify_placement(const TrianglePlacement& placement);

// Necessary condition only: total piece area at most target area.
bool area_necessary(const TrianglePlacement& placement);

struct SearchResult {
  bool found = false;
  TrianglePlacement placement;  // meaningful only when found
  int attempts_used = 0;
};

// Randomized bottom-left greedy packer. Each attempt shuffles the insertion
// order and orientations, then drops pieces corner-first onto the lowest
// available anchor. Piece i of a returned placement covers required[i], and
// every returned placement passes verify_placement with margin `margin`.
// Deterministic for a fixed seed. Throws std::invalid_argument when
// attempts < 1, sides are not positive, margin is negative, or the
// requirement list is empty or invalid.
SearchResult greedy_search(const std::vector<LegRequirement>& required,
                           double c, double d, int attempts,
                           std::uint64_t seed, double margin = 1e-6);

// Certificate serialization. The JSON layout is
//   {"version": 1,
//    "target": [c, d, margin],
//    "pieces": [{"a":..,"b":..,"x0":..,"y0":..,"rotated":false}, ...],
//    "required": [[a, b], ...]}
// with "rotated" optional (default false) and "required" optional (default
// empty). placement_from_json throws std::invalid_argument on anything that
// does not parse into that shape.
std::string placement_to_json(const TrianglePlacement& placement);
TrianglePlacement placement_from_json(const std::string& text);

}  // namespace bidisk::packing
