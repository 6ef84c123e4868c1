#pragma once

#include <optional>
#include <vector>

#include "geometry.hpp"

namespace bidisk::caps {

// Tagged description of a toric domain whose capacity sequence can be
// computed: a ball, an ellipsoid, a polydisk, a region under a convex
// descending chain, or a finite disjoint union of those.
struct DomainSpec {
  enum class Kind { Ball, Ellipsoid, Polydisk, Concave, Union };

  Kind kind = Kind::Ball;
  double a = 0.0;  // ball area, or first axis area
  double b = 0.0;  // second axis area (ellipsoid/polydisk)
  std::optional<geom::ConcaveRegion> region;  // Kind::Concave
  std::vector<DomainSpec> parts;              // Kind::Union

  static DomainSpec ball(double a);
  static DomainSpec ellipsoid(double a, double b);
  static DomainSpec polydisk(double a, double b);
  static DomainSpec concave(geom::ConcaveRegion r);
  static DomainSpec disjoint_union(std::vector<DomainSpec> parts);
};

// Capacity sequence c_0..c_kmax of the described domain.
std::vector<double> domain_capacities(const DomainSpec& d, int kmax);

// Every function returns the capacity sequence c_0..c_kmax (kmax+1 entries,
// c_0 = 0), suitable for elementwise comparison against another domain.

// Ellipsoid with axis areas a and b: c_k is the (k+1)-th smallest value of
// the multiset { m*a + n*b : m, n >= 0 }.
std::vector<double> ellipsoid_capacities(double a, double b, int kmax);

// Ball of area a: c_k = a * d_k with d_k the largest m whose triangular
// number m(m+1)/2 is at most k. Equals ellipsoid_capacities(a, a, kmax).
std::vector<double> ball_capacities(double a, int kmax);

// Polydisk with factor areas a and b:
// c_k = min { a*m + b*n : (m+1)(n+1) >= k+1 }.
std::vector<double> polydisk_capacities(double a, double b, int kmax);

// Disjoint union: c_k = max over splittings k = sum k_i of sum c_{k_i},
// computed as a left fold of pairwise max-plus convolutions. All parts must
// share the same length.
std::vector<double> union_capacities(const std::vector<std::vector<double>>& parts);

// Region bounded by a convex descending chain: the capacities equal those of
// the disjoint union of balls over the region's triangle-weight sequence;
// the first kmax weights determine c_0..c_kmax, because a splitting can use
// at most kmax balls with nonzero index and swapping any used ball for an
// unused earlier (larger) one never decreases the sum.
std::vector<double> concave_capacities(const geom::ConcaveRegion& r, int kmax);

struct Dominance {
  bool ok = false;
  int first_violation = -1;  // least k with source[k] > target[k] + slack
};

// True when source[k] <= target[k] + slack for every k; a necessary
// condition for the source domain to embed into the target.
Dominance dominates(const std::vector<double>& target,
                    const std::vector<double>& source, double slack);

}  // namespace bidisk::caps
