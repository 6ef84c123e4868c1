#pragma once

#include <string>
#include <vector>

#include "capacities.hpp"
#include "geometry.hpp"

namespace bidisk::io {

// Segment count used when a domain is requested by the name "bidisk": fine
// enough that the first two capacities settle to 1e-4.
inline constexpr int kBidiskSegments = 8192;

// Shortest decimal string with at most max_digits significant digits that
// parses back to the closest representable double; past the cap the
// max_digits rendering is returned even if it no longer round-trips. The
// result never depends on locale. max_digits must lie in [1, 17].
std::string format_double(double v, int max_digits = 12);

// Region as {"vertices": [[x, y], ...]} in chain order, one line, values
// rendered by format_double.
std::string region_to_json(const geom::ConcaveRegion& r);

// Accepts the JSON emitted by region_to_json. Throws std::invalid_argument
// on malformed text or a vertex list violating the chain conditions.
geom::ConcaveRegion region_from_json(const std::string& text);

// Region literal: either the builtin form "omega0:N" (N segments) or a JSON
// vertex object. Throws std::invalid_argument when neither parses.
geom::ConcaveRegion parse_region(const std::string& text);

// Domain description:
//   {"ball": a} | {"ellipsoid": [a, b]} | {"polydisk": [a, b]}
//   | {"concave": "omega0:N"} | {"concave": {"vertices": ...}}
//   | {"union": [spec, ...]} | "bidisk"
// The string "bidisk" names the concave model of the lagrangian bidisk,
// sampled with kBidiskSegments segments. Throws std::invalid_argument on
// anything else.
caps::DomainSpec domain_from_json(const std::string& text);

// Two-column CSV with header "x,y", one row per point.
std::string curve_to_csv(const std::vector<geom::Vec2>& points);

// Two-column CSV with header "k,c_k", rows k = 0..caps.size()-1.
std::string capacities_to_csv(const std::vector<double>& caps);

}  // namespace bidisk::io
