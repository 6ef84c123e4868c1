#include "embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bidisk::embed {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

// Uniform double strictly inside (-1, 1), built from the top 53 bits of the
// generator so the stream does not depend on a library's distribution
// internals.
double uniform_open(std::mt19937_64& rng) {
  for (;;) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u != 0.0) return 2.0 * u - 1.0;
  }
}

}  // namespace

Verdict obstruct(const caps::DomainSpec& source, const caps::DomainSpec& target,
                 int kmax, double slack) {
  if (kmax < 1) throw std::invalid_argument("capacity comparison needs kmax >= 1");
  if (!(slack >= 0.0) || !std::isfinite(slack)) {
    throw std::invalid_argument("slack must be nonnegative and finite");
  }
  const std::vector<double> s = caps::domain_capacities(source, kmax);
  const std::vector<double> t = caps::domain_capacities(target, kmax);
  const caps::Dominance dom = caps::dominates(t, s, slack);
  if (!dom.ok) {
    return {Embeds::No, dom.first_violation, "capacity obstruction"};
  }
  return {Embeds::Unknown, -1, "none"};
}

Verdict bidisk_into(TargetKind kind, double a, double b) {
  require_positive_finite(a, "target area a");
  if (kind != TargetKind::Ball) require_positive_finite(b, "target area b");
  bool yes = false;
  switch (kind) {
    case TargetKind::Ball:
      yes = a >= kThresholdSecondary;
      break;
    case TargetKind::Ellipsoid:
      yes = std::min(a, b) >= kThresholdPrimary &&
            std::max(a, b) >= kThresholdSecondary;
      break;
    case TargetKind::Polydisk:
      yes = a >= kThresholdPrimary && b >= kThresholdPrimary;
      break;
  }
  return {yes ? Embeds::Yes : Embeds::No, -1, "closed-form criterion"};
}

Verdict ellipsoid_into_bidisk(int ratio, double b) {
  if (ratio != 1 && ratio != 2) {
    throw std::invalid_argument("only axis ratios 1 and 2 have a sharp criterion");
  }
  require_positive_finite(b, "ellipsoid area b");
  const bool yes = (ratio == 1) ? b <= kThresholdPrimary
                                : 2.0 * b <= kThresholdSecondary;
  return {yes ? Embeds::Yes : Embeds::No, -1, "closed-form criterion"};
}

Containment contains_ellipsoid(const geom::ConcaveRegion& r, double a, double b) {
  require_positive_finite(a, "triangle leg a");
  require_positive_finite(b, "triangle leg b");
  const double m = r.min_functional(1.0 / a, 1.0 / b).value;
  return {m >= 1.0 - geom::tol::kContact, m};
}

std::array<double, 4> explicit_map(const std::array<double, 4>& pq) {
  std::array<double, 4> z{};
  for (int j = 0; j < 2; ++j) {
    const double p = pq[static_cast<std::size_t>(2 * j)];
    const double q = pq[static_cast<std::size_t>(2 * j + 1)];
    if (!(p > -1.0)) throw std::invalid_argument("map needs p > -1");
    const double radius = std::sqrt(2.0 * (p + 1.0) / kPi);
    const double theta = kPi * (q + 1.0);
    z[static_cast<std::size_t>(2 * j)] = radius * std::cos(theta);
    z[static_cast<std::size_t>(2 * j + 1)] = radius * std::sin(theta);
  }
  return z;
}

MapCheckReport explicit_map_check(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("sample count must be at least 1");

  const auto omega = [](int r, int c) -> double {
    if (r / 2 != c / 2) return 0.0;
    if (r % 2 == 0 && c == r + 1) return 1.0;
    if (r % 2 == 1 && c == r - 1) return -1.0;
    return 0.0;
  };

  std::mt19937_64 rng(seed);
  MapCheckReport report;
  report.samples = samples;

  for (int s = 0; s < samples; ++s) {
    std::array<double, 4> pq{};
    for (double& c : pq) c = uniform_open(rng);
    bool ok = true;

    const std::array<double, 4> z = explicit_map(pq);
    for (int j = 0; j < 2; ++j) {
      const double x = z[static_cast<std::size_t>(2 * j)];
      const double y = z[static_cast<std::size_t>(2 * j + 1)];
      const double moment = kPi * (x * x + y * y);
      report.max_moment = std::max(report.max_moment, moment);
      // Mathematically the moment is 2(p+1) < 4; the guard absorbs the few
      // ulps of rounding in the round trip through the map.
      if (!(moment <= 4.0 + 1e-12)) ok = false;
    }

    // Central-difference Jacobian. Each p coordinate sits at distance p+1
    // from the sqrt singularity, so its step scales with that distance; the
    // angle coordinates have unit scale.
    double jac[4][4];
    for (int c = 0; c < 4; ++c) {
      const double h =
          (c % 2 == 0) ? 1e-5 * (pq[static_cast<std::size_t>(c)] + 1.0) : 1e-5;
      std::array<double, 4> fwd = pq;
      std::array<double, 4> bwd = pq;
      fwd[static_cast<std::size_t>(c)] += h;
      bwd[static_cast<std::size_t>(c)] -= h;
      const std::array<double, 4> zf = explicit_map(fwd);
      const std::array<double, 4> zb = explicit_map(bwd);
      for (int r = 0; r < 4; ++r) {
        jac[r][c] = (zf[static_cast<std::size_t>(r)] -
                     zb[static_cast<std::size_t>(r)]) /
                    (2.0 * h);
      }
    }

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        // (J^T Omega J)_{ij} with Omega the paired-block form.
        double v = 0.0;
        for (int r = 0; r < 4; ++r) {
          for (int c = 0; c < 4; ++c) {
            const double w = omega(r, c);
            if (w != 0.0) v += jac[r][i] * w * jac[c][j];
          }
        }
        err = std::max(err, std::fabs(v - omega(i, j)));
      }
    }
    report.max_symplectic_error = std::max(report.max_symplectic_error, err);
    if (err > 1e-6) ok = false;

    if (!ok) {
      ++report.failures;
      report.failing_points.push_back(pq);
    }
  }
  return report;
}

}  // namespace bidisk::embed
