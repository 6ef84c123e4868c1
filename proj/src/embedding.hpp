#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "capacities.hpp"
#include "geometry.hpp"

namespace bidisk::embed {

// The two closed-form embedding thresholds of the open bidisk: the first two
// capacities of its toric model, c_1 = 4 and c_2 = 3*sqrt(3).
inline constexpr double kThresholdPrimary = 4.0;
inline const double kThresholdSecondary = 5.196152422706632;  // 3*sqrt(3)

enum class Embeds { No, Unknown, Yes };

// Verdict of an embedding question. `witness_k` is the first obstructing
// capacity index when capacities refute the embedding (-1 otherwise);
// `criterion` names what decided: "capacity obstruction", "closed-form
// criterion", "inclusion", "explicit map", or "none".
struct Verdict {
  Embeds embeds = Embeds::Unknown;
  int witness_k = -1;
  std::string criterion = "none";
};

// Capacity comparison of two domains: "no" with the first violating index
// when dominance fails, "unknown" (obstruction-free) otherwise. Capacities
// are only necessary conditions, so this alone never answers "yes".
Verdict obstruct(const caps::DomainSpec& source, const caps::DomainSpec& target,
                 int kmax, double slack);

enum class TargetKind { Ball, Ellipsoid, Polydisk };

// Closed-form criteria for embedding the open bidisk into a standard target:
// a ball needs a >= 3*sqrt(3); an ellipsoid needs min(a,b) >= 4 and
// max(a,b) >= 3*sqrt(3); a polydisk needs a, b >= 4. Comparisons are exact
// (no tolerance); a ball target reads only `a`.
Verdict bidisk_into(TargetKind kind, double a, double b);

// Closed-form criteria for embedding an open ellipsoid with axis ratio 1 or
// 2 into the open bidisk: E(b,b) fits iff b <= 4, E(2b,b) fits iff
// 2b <= 3*sqrt(3). Other ratios are rejected: no sharp criterion is known.
Verdict ellipsoid_into_bidisk(int ratio, double b);

struct Containment {
  bool contained = false;
  double min_value = 0.0;  // min over the chain of x/a + y/b
};

// True when the triangle with legs a, b lies under the chain of r, tested as
// min(x/a + y/b) >= 1 - tol::kContact over the chain.
Containment contains_ellipsoid(const geom::ConcaveRegion& r, double a, double b);

// The explicit symplectomorphism used to embed the open bidisk into the open
// polydisk with both factor areas 4: per factor,
//   (p, q) -> z = sqrt(2(p+1)/pi) * exp(i pi (q+1)),
// mapping the open square (-1,1)^2 to a disk of moment-map area < 4.
// Input and output are ordered (p1, q1, p2, q2) and (x1, y1, x2, y2).
std::array<double, 4> explicit_map(const std::array<double, 4>& pq);

struct MapCheckReport {
  int samples = 0;
  int failures = 0;
  double max_symplectic_error = 0.0;  // max |J^T O J - O| entry over samples
  double max_moment = 0.0;            // max of pi |z_j|^2 over samples and j
  std::vector<std::array<double, 4>> failing_points;
};

// Samples uniform points of the open square (-1,1)^4, applies the map, and
// checks that each image satisfies the moment bound pi |z_j|^2 <= 4 and that
// the finite-difference Jacobian is symplectic to 1e-6. The sample stream
// depends only on `seed`, not on the platform's distribution internals.
MapCheckReport explicit_map_check(int samples, std::uint64_t seed);

}  // namespace bidisk::embed
