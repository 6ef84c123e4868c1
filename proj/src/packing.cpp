#include "packing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace bidisk::packing {
namespace {

using Vertex = std::array<double, 2>;
using Triangle = std::array<Vertex, 3>;

Triangle vertices_of(const PlacedTriangle& piece) {
  const double sx = piece.rotated ? -1.0 : 1.0;
  return {Vertex{piece.x0, piece.y0},
          Vertex{piece.x0 + sx * piece.a, piece.y0},
          Vertex{piece.x0, piece.y0 + sx * piece.b}};
}

std::string format_pair(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.9g, %.9g)", x, y);
  return buf;
}

void require_finite_positive(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(what) +
                                " must be finite and positive");
  }
}

void validate(const TrianglePlacement& placement) {
  require_finite_positive(placement.target.c, "target leg c");
  require_finite_positive(placement.target.d, "target leg d");
  if (!std::isfinite(placement.target.margin) || placement.target.margin < 0.0) {
    throw std::invalid_argument("margin must be finite and non-negative");
  }
  if (placement.pieces.empty()) {
    throw std::invalid_argument("placement has no pieces");
  }
  for (const PlacedTriangle& piece : placement.pieces) {
    require_finite_positive(piece.a, "piece leg a");
    require_finite_positive(piece.b, "piece leg b");
    if (!std::isfinite(piece.x0) || !std::isfinite(piece.y0)) {
      throw std::invalid_argument("piece position must be finite");
    }
  }
  for (const LegRequirement& req : placement.required) {
    require_finite_positive(req.a, "required leg a");
    require_finite_positive(req.b, "required leg b");
  }
}

// Signed clearance of one vertex against the three target sides: positive
// inside, negative outside. The hypotenuse value is a true Euclidean
// distance so that it compares against the margin on the same scale as the
// axis distances.
struct SideClearance {
  double value;
  const char* side;
};

SideClearance worst_side(const TargetTriangle& target, const Vertex& v) {
  const double hyp_scale =
      std::hypot(1.0 / target.c, 1.0 / target.d);
  const double hyp =
      (1.0 - v[0] / target.c - v[1] / target.d) / hyp_scale;
  SideClearance worst{v[0], "x-axis"};
  if (v[1] < worst.value) worst = {v[1], "y-axis"};
  if (hyp < worst.value) worst = {hyp, "hypotenuse"};
  return worst;
}

// Separating-axis test for two triangles with unit-length axes, so the
// penetration depth is a geometric distance. Returns a negative value when
// separated, otherwise the minimal translation needed to separate.
double penetration_depth(const Triangle& p, const Triangle& q) {
  double depth = std::numeric_limits<double>::infinity();
  const auto account = [&](const Triangle& src) {
    for (int i = 0; i < 3; ++i) {
      const Vertex& s = src[i];
      const Vertex& t = src[(i + 1) % 3];
      double nx = -(t[1] - s[1]);
      double ny = t[0] - s[0];
      const double len = std::hypot(nx, ny);
      nx /= len;
      ny /= len;
      double lo_p = std::numeric_limits<double>::infinity(), hi_p = -lo_p;
      double lo_q = lo_p, hi_q = -lo_p;
      for (const Vertex& v : p) {
        const double proj = nx * v[0] + ny * v[1];
        lo_p = std::min(lo_p, proj);
        hi_p = std::max(hi_p, proj);
      }
      for (const Vertex& v : q) {
        const double proj = nx * v[0] + ny * v[1];
        lo_q = std::min(lo_q, proj);
        hi_q = std::max(hi_q, proj);
      }
      depth = std::min(depth, std::min(hi_p, hi_q) - std::max(lo_p, lo_q));
    }
  };
  account(p);
  account(q);
  return depth;
}

bool covers(const PlacedTriangle& piece, const LegRequirement& req) {
  return (piece.a >= req.a && piece.b >= req.b) ||
         (piece.a >= req.b && piece.b >= req.a);
}

// Kuhn's augmenting-path matching from requirements to pieces.
bool try_assign(int req, const std::vector<std::vector<int>>& candidates,
                std::vector<char>& visited, std::vector<int>& owner) {
  for (int piece : candidates[req]) {
    if (visited[piece]) continue;
    visited[piece] = 1;
    if (owner[piece] < 0 ||
        try_assign(owner[piece], candidates, visited, owner)) {
      owner[piece] = req;
      return true;
    }
  }
  return false;
}

}  // namespace

VerifyReport verify_placement(const TrianglePlacement& placement) {
  validate(placement);
  VerifyReport report;
  const int n = static_cast<int>(placement.pieces.size());

  std::vector<Triangle> tris;
  tris.reserve(placement.pieces.size());
  for (const PlacedTriangle& piece : placement.pieces) {
    tris.push_back(vertices_of(piece));
  }

  for (int i = 0; i < n; ++i) {
    SideClearance worst{std::numeric_limits<double>::infinity(), ""};
    Vertex bad{};
    for (const Vertex& v : tris[i]) {
      const SideClearance c = worst_side(placement.target, v);
      if (c.value < worst.value) {
        worst = c;
        bad = v;
      }
    }
    if (worst.value < placement.target.margin) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "piece %d: vertex %s clears the %s by %.9g < margin %.9g",
                    i, format_pair(bad[0], bad[1]).c_str(), worst.side,
                    worst.value, placement.target.margin);
      report.failures.push_back({Failure::Kind::kContainment, i, -1, buf});
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double depth = penetration_depth(tris[i], tris[j]);
      if (depth > tol::kOverlap) {
        char buf[120];
        std::snprintf(buf, sizeof(buf),
                      "pieces %d and %d overlap with penetration depth %.9g",
                      i, j, depth);
        report.failures.push_back({Failure::Kind::kOverlap, i, j, buf});
      }
    }
  }

  const int m = static_cast<int>(placement.required.size());
  std::vector<std::vector<int>> candidates(m);
  for (int r = 0; r < m; ++r) {
    for (int p = 0; p < n; ++p) {
      if (covers(placement.pieces[p], placement.required[r])) {
        candidates[r].push_back(p);
      }
    }
  }
  std::vector<int> owner(n, -1);
  for (int r = 0; r < m; ++r) {
    std::vector<char> visited(n, 0);
    if (!try_assign(r, candidates, visited, owner)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "requirement %d %s has no unclaimed piece with legs "
                    "at least that large",
                    r,
                    format_pair(placement.required[r].a,
                                placement.required[r].b)
                        .c_str());
      report.failures.push_back({Failure::Kind::kRequirement, -1, -1, buf});
    }
  }

  report.ok = report.failures.empty();
  return report;
}

bool area_necessary(const TrianglePlacement& placement) {
  validate(placement);
  double total = 0.0;
  for (const PlacedTriangle& piece : placement.pieces) {
    total += 0.5 * piece.a * piece.b;
  }
  return total <= 0.5 * placement.target.c * placement.target.d;
}

SearchResult greedy_search(const std::vector<LegRequirement>& required,
                           double c, double d, int attempts,
                           std::uint64_t seed, double margin) {
  require_finite_positive(c, "target leg c");
  require_finite_positive(d, "target leg d");
  if (!std::isfinite(margin) || margin < 0.0) {
    throw std::invalid_argument("margin must be finite and non-negative");
  }
  if (attempts < 1) {
    throw std::invalid_argument("attempts must be at least 1");
  }
  if (required.empty()) {
    throw std::invalid_argument("requirement list is empty");
  }
  for (const LegRequirement& req : required) {
    require_finite_positive(req.a, "required leg a");
    require_finite_positive(req.b, "required leg b");
  }

  const TargetTriangle target{c, d, margin};
  const int n = static_cast<int>(required.size());
  std::mt19937_64 rng(seed);

  SearchResult result;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> order(required.size());
    std::iota(order.begin(), order.end(), 0);
    if (attempt == 0) {
      // First attempt: deterministic big-to-small heuristic.
      std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return required[lhs].a * required[lhs].b >
               required[rhs].a * required[rhs].b;
      });
    } else {
      std::shuffle(order.begin(), order.end(), rng);
    }

    // Candidates are generated flush against the margin, so recovering a
    // half-turned vertex by subtraction can round a few ulps past it. Seat
    // anchors one slack inside and accept half a slack of rounding; every
    // returned placement then clears the exact margin check.
    constexpr double kAnchorSlack = 1e-9;
    std::vector<PlacedTriangle> placed(required.size());
    std::vector<Triangle> placed_tris;
    std::vector<std::pair<double, double>> anchors{
        {margin + kAnchorSlack, margin + kAnchorSlack}};
    bool attempt_ok = true;

    for (int step = 0; step < n && attempt_ok; ++step) {
      const LegRequirement& req = required[order[step]];
      std::array<PlacedTriangle, 4> orientations{
          PlacedTriangle{req.a, req.b, 0, 0, false},
          PlacedTriangle{req.b, req.a, 0, 0, false},
          PlacedTriangle{req.a, req.b, 0, 0, true},
          PlacedTriangle{req.b, req.a, 0, 0, true},
      };
      if (attempt > 0) {
        std::shuffle(orientations.begin(), orientations.end(), rng);
      }
      std::stable_sort(anchors.begin(), anchors.end(),
                       [](const auto& lhs, const auto& rhs) {
                         return lhs.second != rhs.second
                                    ? lhs.second < rhs.second
                                    : lhs.first < rhs.first;
                       });

      bool piece_done = false;
      const std::size_t anchor_count = anchors.size();
      for (std::size_t ai = 0; ai < anchor_count && !piece_done; ++ai) {
        // Copy the point: placing a piece appends to the anchor vector.
        const double ax = anchors[ai].first;
        const double ay = anchors[ai].second;
        for (PlacedTriangle candidate : orientations) {
          // Anchor the piece's bounding box at the candidate point.
          candidate.x0 = ax + (candidate.rotated ? candidate.a : 0);
          candidate.y0 = ay + (candidate.rotated ? candidate.b : 0);
          const Triangle tri = vertices_of(candidate);
          bool fits = true;
          for (const Vertex& v : tri) {
            if (worst_side(target, v).value < margin + 0.5 * kAnchorSlack) {
              fits = false;
              break;
            }
          }
          if (!fits) continue;
          for (const Triangle& other : placed_tris) {
            if (penetration_depth(tri, other) > tol::kOverlap) {
              fits = false;
              break;
            }
          }
          if (!fits) continue;

          placed[order[step]] = candidate;
          placed_tris.push_back(tri);
          anchors.emplace_back(ax + candidate.a, ay);
          anchors.emplace_back(ax, ay + candidate.b);
          piece_done = true;
          break;
        }
      }
      attempt_ok = piece_done;
    }

    if (attempt_ok) {
      result.found = true;
      result.placement = TrianglePlacement{target, std::move(placed), required};
      result.attempts_used = attempt + 1;
      if (!verify_placement(result.placement).ok) {
        throw std::logic_error("greedy_search produced an invalid placement");
      }
      return result;
    }
  }

  result.attempts_used = attempts;
  return result;
}

std::string placement_to_json(const TrianglePlacement& placement) {
  nlohmann::json root;
  root["version"] = 1;
  root["target"] = {placement.target.c, placement.target.d,
                    placement.target.margin};
  nlohmann::json pieces = nlohmann::json::array();
  for (const PlacedTriangle& piece : placement.pieces) {
    nlohmann::json entry{{"a", piece.a},
                         {"b", piece.b},
                         {"x0", piece.x0},
                         {"y0", piece.y0}};
    if (piece.rotated) entry["rotated"] = true;
    pieces.push_back(std::move(entry));
  }
  root["pieces"] = std::move(pieces);
  nlohmann::json reqs = nlohmann::json::array();
  for (const LegRequirement& req : placement.required) {
    reqs.push_back({req.a, req.b});
  }
  root["required"] = std::move(reqs);
  return root.dump(2) + "\n";
}

TrianglePlacement placement_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("placement JSON: ") + err.what());
  }
  try {
    if (!root.is_object()) {
      throw std::invalid_argument("top level is not an object");
    }
    if (root.contains("version") && root["version"].get<int>() != 1) {
      throw std::invalid_argument("unsupported certificate version");
    }
    const auto& target = root.at("target");
    if (!target.is_array() || target.size() < 2 || target.size() > 3) {
      throw std::invalid_argument("target must be [c, d] or [c, d, margin]");
    }
    TrianglePlacement placement;
    placement.target.c = target.at(0).get<double>();
    placement.target.d = target.at(1).get<double>();
    placement.target.margin =
        target.size() == 3 ? target.at(2).get<double>() : 1e-6;
    for (const auto& entry : root.at("pieces")) {
      PlacedTriangle piece;
      piece.a = entry.at("a").get<double>();
      piece.b = entry.at("b").get<double>();
      piece.x0 = entry.at("x0").get<double>();
      piece.y0 = entry.at("y0").get<double>();
      piece.rotated = entry.value("rotated", false);
      placement.pieces.push_back(piece);
    }
    if (root.contains("required")) {
      for (const auto& entry : root.at("required")) {
        if (!entry.is_array() || entry.size() != 2) {
          throw std::invalid_argument("required entries must be [a, b]");
        }
        placement.required.push_back(
            {entry.at(0).get<double>(), entry.at(1).get<double>()});
      }
    }
    return placement;
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("placement JSON: ") + err.what());
  }
}

}  // namespace bidisk::packing
