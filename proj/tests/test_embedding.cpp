#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "capacities.hpp"
#include "embedding.hpp"
#include "geometry.hpp"

using bidisk::caps::DomainSpec;
using bidisk::embed::bidisk_into;
using bidisk::embed::contains_ellipsoid;
using bidisk::embed::ellipsoid_into_bidisk;
using bidisk::embed::Embeds;
using bidisk::embed::explicit_map;
using bidisk::embed::explicit_map_check;
using bidisk::embed::obstruct;
using bidisk::embed::TargetKind;
using bidisk::embed::Verdict;
using bidisk::geom::ConcaveRegion;

namespace {

const double kSecondary = 3.0 * std::sqrt(3.0);

DomainSpec bidisk_domain() {
  return DomainSpec::concave(ConcaveRegion::omega0(8192));
}

}  // namespace

TEST_CASE("capacity obstruction refutes the bidisk into a small ball") {
  const Verdict v = obstruct(bidisk_domain(), DomainSpec::ball(5.0), 10, 1e-6);
  CHECK(v.embeds == Embeds::No);
  CHECK(v.witness_k == 2);  // second capacity: 3*sqrt(3) > 5
  CHECK(v.criterion == "capacity obstruction");
}

TEST_CASE("the tight ellipsoid target is obstruction-free") {
  const Verdict v =
      obstruct(bidisk_domain(), DomainSpec::ellipsoid(4.0, kSecondary), 100, 1e-6);
  CHECK(v.embeds == Embeds::Unknown);
  CHECK(v.witness_k == -1);
  CHECK(v.criterion == "none");
}

TEST_CASE("a taller ellipsoid still fails on the second capacity") {
  const Verdict v =
      obstruct(bidisk_domain(), DomainSpec::ellipsoid(4.0, 5.0), 10, 1e-6);
  CHECK(v.embeds == Embeds::No);
  CHECK(v.witness_k == 2);  // min(2*4, 5) = 5 < 3*sqrt(3)
}

TEST_CASE("a domain compared with itself is obstruction-free") {
  const Verdict v = obstruct(DomainSpec::ball(1.0), DomainSpec::ball(1.0), 20, 0.0);
  CHECK(v.embeds == Embeds::Unknown);
}

TEST_CASE("closed-form ball criterion is sharp at 3*sqrt(3)") {
  CHECK(bidisk_into(TargetKind::Ball, kSecondary, 0.0).embeds == Embeds::Yes);
  CHECK(bidisk_into(TargetKind::Ball, kSecondary - 1e-9, 0.0).embeds == Embeds::No);
  CHECK(bidisk_into(TargetKind::Ball, 100.0, 0.0).embeds == Embeds::Yes);
  CHECK(bidisk_into(TargetKind::Ball, 4.0, 0.0).embeds == Embeds::No);
  CHECK(bidisk_into(TargetKind::Ball, 5.0, 0.0).criterion == "closed-form criterion");
}

TEST_CASE("closed-form ellipsoid criterion needs both thresholds") {
  CHECK(bidisk_into(TargetKind::Ellipsoid, 4.0, kSecondary).embeds == Embeds::Yes);
  CHECK(bidisk_into(TargetKind::Ellipsoid, kSecondary, 4.0).embeds == Embeds::Yes);
  CHECK(bidisk_into(TargetKind::Ellipsoid, 4.5, 5.0).embeds == Embeds::No);
  CHECK(bidisk_into(TargetKind::Ellipsoid, 3.9, 100.0).embeds == Embeds::No);
  CHECK(bidisk_into(TargetKind::Ellipsoid, 4.0, 6.0).embeds == Embeds::Yes);
}

TEST_CASE("closed-form polydisk criterion needs both factors at 4") {
  CHECK(bidisk_into(TargetKind::Polydisk, 4.0, 4.0).embeds == Embeds::Yes);
  CHECK(bidisk_into(TargetKind::Polydisk, 4.0, 100.0).embeds == Embeds::Yes);
  CHECK(bidisk_into(TargetKind::Polydisk, 3.999, 5.0).embeds == Embeds::No);
  CHECK(bidisk_into(TargetKind::Polydisk, 5.0, 3.999).embeds == Embeds::No);
}

TEST_CASE("round and double-ratio ellipsoids into the bidisk") {
  CHECK(ellipsoid_into_bidisk(1, 4.0).embeds == Embeds::Yes);
  CHECK(ellipsoid_into_bidisk(1, 4.0 + 1e-9).embeds == Embeds::No);
  CHECK(ellipsoid_into_bidisk(2, kSecondary / 2.0).embeds == Embeds::Yes);
  CHECK(ellipsoid_into_bidisk(2, 2.7).embeds == Embeds::No);  // 5.4 > 3*sqrt(3)
  CHECK_THROWS_AS(ellipsoid_into_bidisk(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ellipsoid_into_bidisk(0, 1.0), std::invalid_argument);
}

TEST_CASE("triangle containment in the bidisk region") {
  const ConcaveRegion t1 = ConcaveRegion::triangle(1.0, 1.0);
  CHECK(contains_ellipsoid(t1, 1.0, 1.0).contained);  // boundary case

  const ConcaveRegion r = ConcaveRegion::omega0(8192);
  CHECK(contains_ellipsoid(r, 4.0, 4.0).contained);
  const auto tangent = contains_ellipsoid(r, kSecondary, kSecondary / 2.0);
  CHECK(tangent.contained);
  CHECK(std::fabs(tangent.min_value - 1.0) < 1e-6);  // tangency residual
  // Monotone in the legs: anything smaller fits, slightly larger fails.
  CHECK(contains_ellipsoid(r, 3.0, 3.0).contained);
  CHECK(contains_ellipsoid(r, 4.0, 2.0).contained);
  CHECK_FALSE(contains_ellipsoid(r, 4.05, 4.05).contained);
  CHECK_FALSE(contains_ellipsoid(r, kSecondary * 1.001, kSecondary / 2.0 * 1.001)
                  .contained);
}

TEST_CASE("closed forms and capacity obstructions agree on a coarse grid") {
  const DomainSpec source = bidisk_domain();
  const std::vector<double> grid = {3.0, 4.5, 7.0};
  for (double a : grid) {
    const Verdict closed = bidisk_into(TargetKind::Ball, a, 0.0);
    const Verdict oracle = obstruct(source, DomainSpec::ball(a), 100, 1e-6);
    CAPTURE(a);
    if (closed.embeds == Embeds::Yes) {
      CHECK(oracle.embeds == Embeds::Unknown);
    } else {
      CHECK(oracle.embeds == Embeds::No);
      CHECK(oracle.witness_k >= 1);
      CHECK(oracle.witness_k <= 100);
    }
    for (double b : grid) {
      const Verdict ce = bidisk_into(TargetKind::Ellipsoid, a, b);
      const Verdict oe = obstruct(source, DomainSpec::ellipsoid(a, b), 100, 1e-6);
      const Verdict cp = bidisk_into(TargetKind::Polydisk, a, b);
      const Verdict op = obstruct(source, DomainSpec::polydisk(a, b), 100, 1e-6);
      CAPTURE(b);
      CHECK((ce.embeds == Embeds::Yes) == (oe.embeds == Embeds::Unknown));
      CHECK((cp.embeds == Embeds::Yes) == (op.embeds == Embeds::Unknown));
    }
  }
}

TEST_CASE("explicit map: spot values") {
  const std::array<double, 4> z = explicit_map({0.0, 0.0, 0.0, 0.0});
  const double m1 = std::numbers::pi * (z[0] * z[0] + z[1] * z[1]);
  CHECK(m1 == doctest::Approx(2.0).epsilon(1e-14));  // 2(p+1) = 2

  const std::array<double, 4> w = explicit_map({0.9, 0.9, -0.9, -0.9});
  CHECK(std::numbers::pi * (w[0] * w[0] + w[1] * w[1]) ==
        doctest::Approx(3.8).epsilon(1e-14));
  CHECK(std::numbers::pi * (w[2] * w[2] + w[3] * w[3]) ==
        doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("explicit map: a thousand random samples stay symplectic") {
  const auto report = explicit_map_check(1000, 20260816ULL);
  CHECK(report.samples == 1000);
  CHECK(report.failures == 0);
  CHECK(report.failing_points.empty());
  CHECK(report.max_symplectic_error < 1e-6);
  CHECK(report.max_moment <= 4.0 + 1e-12);
}

TEST_CASE("explicit map check is deterministic in the seed") {
  const auto a = explicit_map_check(64, 7ULL);
  const auto b = explicit_map_check(64, 7ULL);
  CHECK(a.max_symplectic_error == b.max_symplectic_error);
  CHECK(a.max_moment == b.max_moment);
  const auto c = explicit_map_check(64, 8ULL);
  CHECK(c.max_moment != a.max_moment);  // different stream
}

TEST_CASE("embedding input validation") {
  CHECK_THROWS_AS(obstruct(DomainSpec::ball(1.0), DomainSpec::ball(1.0), 0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(obstruct(DomainSpec::ball(1.0), DomainSpec::ball(1.0), 5, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(bidisk_into(TargetKind::Ball, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(contains_ellipsoid(ConcaveRegion::triangle(1, 1), 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(explicit_map_check(0, 1ULL), std::invalid_argument);
}
