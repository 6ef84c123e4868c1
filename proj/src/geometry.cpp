#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bidisk::geom {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ConcaveRegion ConcaveRegion::from_vertices(std::vector<Vec2> chain) {
  if (chain.size() < 2) {
    throw std::invalid_argument("boundary chain needs at least two vertices");
  }
  double scale = 0.0;
  for (const Vec2& v : chain) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw std::invalid_argument("boundary chain has a non-finite coordinate");
    }
    scale = std::max({scale, std::fabs(v.x), std::fabs(v.y)});
  }
  if (scale == 0.0) {
    throw std::invalid_argument("boundary chain is a single point at the origin");
  }
  if (std::fabs(chain.front().x) > tol::kEndpointSnap * scale) {
    throw std::invalid_argument("boundary chain must start on the y-axis");
  }
  chain.front().x = 0.0;
  if (std::fabs(chain.back().y) > tol::kEndpointSnap * scale) {
    throw std::invalid_argument("boundary chain must end on the x-axis");
  }
  chain.back().y = 0.0;

  // Merge consecutive near-duplicates. When the run reaches the final vertex,
  // the merged vertex is replaced by it so the exact x-axis endpoint survives.
  const double dup = tol::kDuplicate * scale;
  std::vector<Vec2> vs;
  vs.reserve(chain.size());
  vs.push_back(chain.front());
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (std::fabs(chain[i].x - vs.back().x) <= dup &&
        std::fabs(chain[i].y - vs.back().y) <= dup) {
      if (i + 1 == chain.size()) vs.back() = chain[i];
      continue;
    }
    vs.push_back(chain[i]);
  }
  if (vs.size() < 2) {
    throw std::invalid_argument("boundary chain collapses to a point");
  }

  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    double dx = vs[i + 1].x - vs[i].x;
    double dy = vs[i + 1].y - vs[i].y;
    if (dx < 0.0 && dx >= -dup) {
      vs[i + 1].x = vs[i].x;
      dx = 0.0;
    }
    if (dy > 0.0 && dy <= dup) {
      vs[i + 1].y = vs[i].y;
      dy = 0.0;
    }
    if (dx < 0.0) throw std::invalid_argument("chain x-coordinates must not decrease");
    if (dy > 0.0) throw std::invalid_argument("chain y-coordinates must not increase");
    if (dx == 0.0 && dy == 0.0) throw std::invalid_argument("chain repeats a vertex");
  }

  for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
    const double ax = vs[i + 1].x - vs[i].x;
    const double ay = vs[i + 1].y - vs[i].y;
    const double bx = vs[i + 2].x - vs[i + 1].x;
    const double by = vs[i + 2].y - vs[i + 1].y;
    const double cross = ax * by - ay * bx;
    const double bound = tol::kConvexSlack * std::hypot(ax, ay) * std::hypot(bx, by);
    if (cross < -bound) {
      throw std::invalid_argument("boundary chain is not convex");
    }
  }

  double area = 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    area += (vs[i + 1].x - vs[i].x) * (vs[i].y + vs[i + 1].y) * 0.5;
  }
  if (!(area > 0.0)) {
    throw std::invalid_argument("region must have positive area");
  }

  ConcaveRegion r;
  r.chain_ = std::move(vs);
  r.area_ = area;
  return r;
}

ConcaveRegion ConcaveRegion::triangle(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("triangle legs must be positive and finite");
  }
  return from_vertices({{0.0, b}, {a, 0.0}});
}

Vec2 omega0_point(double alpha) {
  const double s = std::sin(0.5 * alpha);
  const double c = std::cos(0.5 * alpha);
  return {2.0 * s - alpha * c, 2.0 * s + (2.0 * kPi - alpha) * c};
}

ConcaveRegion ConcaveRegion::omega0(int segments) {
  if (segments < 1) {
    throw std::invalid_argument("segment count must be positive");
  }
  const int n = segments;
  std::vector<Vec2> vs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n / 2; ++i) {
    const double alpha = kPi * (1.0 - std::cos(kPi * i / n));
    vs[static_cast<std::size_t>(i)] = omega0_point(alpha);
  }
  for (int i = n / 2 + 1; i <= n; ++i) {
    const Vec2& m = vs[static_cast<std::size_t>(n - i)];
    vs[static_cast<std::size_t>(i)] = {m.y, m.x};
  }
  if (n % 2 == 0) {
    // The true midpoint sample is exactly (2, 2); place the computed one on
    // the diagonal so the whole chain mirrors exactly through x<->y.
    Vec2& m = vs[static_cast<std::size_t>(n / 2)];
    const double d = 0.5 * (m.x + m.y);
    m = {d, d};
  }
  return from_vertices(std::move(vs));
}

MinResult ConcaveRegion::min_functional(double cx, double cy) const {
  if (!(cx > 0.0) || !(cy > 0.0)) {
    throw std::invalid_argument("functional coefficients must be positive");
  }
  const int n = static_cast<int>(chain_.size());
  const auto f = [&](int i) {
    const Vec2& v = chain_[static_cast<std::size_t>(i)];
    return cx * v.x + cy * v.y;
  };

  int lo = 0;
  int hi = n - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (f(mid + 1) < f(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }

  // Rounding can make the vertex values jitter near the valley floor; a short
  // scan around the bisection result absorbs that.
  int best = lo;
  for (int i = std::max(0, lo - 32); i <= std::min(n - 1, lo + 32); ++i) {
    if (f(i) < f(best)) best = i;
  }

  const double value = f(best);
  int first = best;
  while (first > 0 && f(first - 1) <= value + tol::kContact) --first;
  int last = best;
  while (last + 1 < n && f(last + 1) <= value + tol::kContact) ++last;
  return {value, first, last};
}

bool ConcaveRegion::contains_point(Vec2 p, double slack) const {
  const std::vector<Vec2>& vs = chain_;
  if (p.x < -slack || p.y < -slack) return false;
  if (p.x > vs.back().x + slack) return false;
  const double x = std::clamp(p.x, 0.0, vs.back().x);

  const auto it = std::upper_bound(
      vs.begin(), vs.end(), x,
      [](double value, const Vec2& v) { return value < v.x; });
  double height;
  if (it == vs.begin()) {
    height = vs.front().y;
  } else {
    std::size_t j = static_cast<std::size_t>(it - vs.begin()) - 1;
    if (vs[j].x == x) {
      // On a vertical step the region extends up to the topmost vertex.
      while (j > 0 && vs[j - 1].x == x) --j;
      height = vs[j].y;
    } else {
      const Vec2& a = vs[j];
      const Vec2& b = vs[j + 1];
      height = a.y + (x - a.x) / (b.x - a.x) * (b.y - a.y);
    }
  }
  return p.y <= height + slack;
}

}  // namespace bidisk::geom
