#include "capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "weights.hpp"

namespace bidisk::caps {

namespace {

void require_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

void require_kmax(int kmax) {
  if (kmax < 0) throw std::invalid_argument("capacity index bound must be nonnegative");
}

std::vector<double> max_plus(const std::vector<double>& a,
                             const std::vector<double>& b) {
  const std::size_t n = a.size();
  std::vector<double> out(n, -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < n; ++k) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= k; ++i) {
      best = std::max(best, a[i] + b[k - i]);
    }
    out[k] = best;
  }
  return out;
}

}  // namespace

DomainSpec DomainSpec::ball(double a) {
  DomainSpec d;
  d.kind = Kind::Ball;
  d.a = a;
  return d;
}

DomainSpec DomainSpec::ellipsoid(double a, double b) {
  DomainSpec d;
  d.kind = Kind::Ellipsoid;
  d.a = a;
  d.b = b;
  return d;
}

DomainSpec DomainSpec::polydisk(double a, double b) {
  DomainSpec d;
  d.kind = Kind::Polydisk;
  d.a = a;
  d.b = b;
  return d;
}

DomainSpec DomainSpec::concave(geom::ConcaveRegion r) {
  DomainSpec d;
  d.kind = Kind::Concave;
  d.region = std::move(r);
  return d;
}

DomainSpec DomainSpec::disjoint_union(std::vector<DomainSpec> parts) {
  DomainSpec d;
  d.kind = Kind::Union;
  d.parts = std::move(parts);
  return d;
}

std::vector<double> domain_capacities(const DomainSpec& d, int kmax) {
  switch (d.kind) {
    case DomainSpec::Kind::Ball:
      return ball_capacities(d.a, kmax);
    case DomainSpec::Kind::Ellipsoid:
      return ellipsoid_capacities(d.a, d.b, kmax);
    case DomainSpec::Kind::Polydisk:
      return polydisk_capacities(d.a, d.b, kmax);
    case DomainSpec::Kind::Concave:
      if (!d.region) throw std::invalid_argument("concave domain lacks its region");
      return concave_capacities(*d.region, kmax);
    case DomainSpec::Kind::Union: {
      std::vector<std::vector<double>> parts;
      parts.reserve(d.parts.size());
      for (const DomainSpec& p : d.parts) parts.push_back(domain_capacities(p, kmax));
      return union_capacities(parts);
    }
  }
  throw std::logic_error("unreachable domain kind");
}

std::vector<double> ellipsoid_capacities(double a, double b, int kmax) {
  require_positive_finite(a, "ellipsoid area a");
  require_positive_finite(b, "ellipsoid area b");
  require_kmax(kmax);

  // Everything at or below kmax*min(a,b) is collected; the multiples of
  // min(a,b) alone already supply kmax+1 values, so the cut is safe. The
  // small inflation keeps boundary values from being lost to rounding.
  const double bound = kmax * std::min(a, b) * (1.0 + 1e-12);
  std::vector<double> vals;
  for (int m = 0;; ++m) {
    const double base = m * a;
    if (base > bound) break;
    for (int n = 0;; ++n) {
      const double v = base + n * b;
      if (v > bound) break;
      vals.push_back(v);
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.resize(static_cast<std::size_t>(kmax) + 1);
  return vals;
}

std::vector<double> ball_capacities(double a, int kmax) {
  require_positive_finite(a, "ball area");
  require_kmax(kmax);
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  int m = 0;
  for (int k = 0; k <= kmax; ++k) {
    while ((m + 1) * (m + 2) / 2 <= k) ++m;
    out[static_cast<std::size_t>(k)] = a * m;
  }
  return out;
}

std::vector<double> polydisk_capacities(double a, double b, int kmax) {
  require_positive_finite(a, "polydisk area a");
  require_positive_finite(b, "polydisk area b");
  require_kmax(kmax);
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= k; ++m) {
      if (a * m >= best) break;
      const int n = (k + m + 1) / (m + 1) - 1;  // least n with (m+1)(n+1) >= k+1
      best = std::min(best, a * m + b * n);
    }
    out[static_cast<std::size_t>(k)] = best;
  }
  return out;
}

std::vector<double> union_capacities(const std::vector<std::vector<double>>& parts) {
  if (parts.empty()) throw std::invalid_argument("union needs at least one part");
  for (const auto& p : parts) {
    if (p.size() != parts.front().size()) {
      throw std::invalid_argument("union parts must share one capacity length");
    }
    if (p.empty()) throw std::invalid_argument("union parts must be nonempty");
  }
  std::vector<double> acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = max_plus(acc, parts[i]);
  }
  return acc;
}

std::vector<double> concave_capacities(const geom::ConcaveRegion& r, int kmax) {
  require_kmax(kmax);
  if (kmax == 0) return {0.0};
  const std::vector<double> ws = weights::weight_sequence(r, kmax);
  std::vector<double> acc = ball_capacities(ws.front(), kmax);
  for (std::size_t i = 1; i < ws.size(); ++i) {
    acc = max_plus(acc, ball_capacities(ws[i], kmax));
  }
  return acc;
}

Dominance dominates(const std::vector<double>& target,
                    const std::vector<double>& source, double slack) {
  if (target.size() != source.size()) {
    throw std::invalid_argument("capacity sequences must have equal length");
  }
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (source[k] > target[k] + slack) {
      return {false, static_cast<int>(k)};
    }
  }
  return {true, -1};
}

}  // namespace bidisk::caps
