#include "weights.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <utility>

namespace bidisk::weights {

using geom::ConcaveRegion;
using geom::MinResult;
using geom::Vec2;

namespace {

double chain_area(const std::vector<Vec2>& vs) {
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    area += (vs[i + 1].x - vs[i].x) * (vs[i].y + vs[i + 1].y) * 0.5;
  }
  return area;
}

void append_if_substantial(std::vector<ConcaveRegion>& out, std::vector<Vec2> vs) {
  if (vs.size() < 2) return;
  if (chain_area(vs) < geom::tol::kMinArea) return;
  out.push_back(ConcaveRegion::from_vertices(std::move(vs)));
}

}  // namespace

MinResult largest_triangle(const ConcaveRegion& r) {
  return r.min_functional(1.0, 1.0);
}

std::vector<ConcaveRegion> split_off_triangle(const ConcaveRegion& r,
                                              const MinResult& contact) {
  const std::vector<Vec2>& vs = r.chain();
  const int n = static_cast<int>(vs.size()) - 1;
  const double a = contact.value;
  std::vector<ConcaveRegion> children;

  if (contact.first > 0) {
    std::vector<Vec2> upper;
    upper.reserve(static_cast<std::size_t>(contact.first) + 1);
    for (int i = 0; i < contact.first; ++i) {
      const Vec2& v = vs[static_cast<std::size_t>(i)];
      upper.push_back({v.x, v.x + v.y - a});
    }
    // The contact vertex lands exactly on the x-axis.
    upper.push_back({vs[static_cast<std::size_t>(contact.first)].x, 0.0});
    append_if_substantial(children, std::move(upper));
  }

  if (contact.last < n) {
    std::vector<Vec2> lower;
    lower.reserve(static_cast<std::size_t>(n - contact.last) + 1);
    lower.push_back({0.0, vs[static_cast<std::size_t>(contact.last)].y});
    for (int i = contact.last + 1; i <= n; ++i) {
      const Vec2& v = vs[static_cast<std::size_t>(i)];
      lower.push_back({v.x + v.y - a, v.y});
    }
    append_if_substantial(children, std::move(lower));
  }

  return children;
}

std::vector<double> weight_sequence(const ConcaveRegion& r, int count,
                                    double min_weight) {
  std::vector<double> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));

  // Regions live in an arena so queue entries stay cheap to move; a popped
  // region is released as soon as it has been split.
  std::deque<std::optional<ConcaveRegion>> arena;
  struct Entry {
    double weight;
    std::int64_t order;
    std::size_t slot;
    MinResult contact;
  };
  const auto later = [](const Entry& a, const Entry& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.order > b.order;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);

  std::int64_t next_order = 0;
  const auto enqueue = [&](ConcaveRegion region) {
    const MinResult contact = largest_triangle(region);
    arena.emplace_back(std::move(region));
    queue.push({contact.value, next_order++, arena.size() - 1, contact});
  };

  enqueue(r);
  while (!queue.empty() && static_cast<int>(out.size()) < count) {
    const Entry top = queue.top();
    queue.pop();
    if (top.weight < min_weight) break;
    out.push_back(top.weight);
    for (ConcaveRegion& child : split_off_triangle(*arena[top.slot], top.contact)) {
      enqueue(std::move(child));
    }
    arena[top.slot].reset();
  }
  return out;
}

}  // namespace bidisk::weights
