#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "capacities.hpp"
#include "geometry.hpp"

using bidisk::caps::ball_capacities;
using bidisk::caps::concave_capacities;
using bidisk::caps::dominates;
using bidisk::caps::ellipsoid_capacities;
using bidisk::caps::polydisk_capacities;
using bidisk::caps::union_capacities;
using bidisk::geom::ConcaveRegion;

namespace {

// Oracle for polydisk capacities: exhaust every lattice pair directly.
double polydisk_oracle(double a, double b, int k) {
  double best = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= k; ++m) {
    for (int n = 0; n <= k; ++n) {
      if ((m + 1) * (n + 1) >= k + 1) best = std::min(best, a * m + b * n);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("unit ball capacities follow the triangular-number staircase") {
  const std::vector<double> want = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4};
  const std::vector<double> got = ball_capacities(1.0, 10);
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(k);
    CHECK(got[k] == want[k]);
  }
}

TEST_CASE("ball equals the equal-axis ellipsoid") {
  const std::vector<double> b = ball_capacities(2.37, 300);
  const std::vector<double> e = ellipsoid_capacities(2.37, 2.37, 300);
  REQUIRE(b.size() == e.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    CAPTURE(k);
    CHECK(b[k] == doctest::Approx(e[k]).epsilon(1e-13));
  }
}

TEST_CASE("2x3 ellipsoid capacities match the hand-enumerated multiset") {
  // All values 2m+3n <= 12, sorted with multiplicity:
  const std::vector<double> want = {0, 2, 3, 4, 5,  6,  6,  7,  8,  8,
                                    9, 9, 10, 10, 11, 11, 12, 12, 12};
  const std::vector<double> got = ellipsoid_capacities(2.0, 3.0, 18);
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(k);
    CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-14));
  }
}

TEST_CASE("unit polydisk capacities match the divisor staircase") {
  const std::vector<double> want = {0, 1, 2, 2, 3, 3, 4, 4, 4};
  const std::vector<double> got = polydisk_capacities(1.0, 1.0, 8);
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(k);
    CHECK(got[k] == want[k]);
  }
}

TEST_CASE("polydisk capacities agree with the exhaustive oracle") {
  for (int k = 0; k <= 40; ++k) {
    CAPTURE(k);
    CHECK(polydisk_capacities(2.0, 3.0, 40)[static_cast<std::size_t>(k)] ==
          doctest::Approx(polydisk_oracle(2.0, 3.0, k)).epsilon(1e-14));
    CHECK(polydisk_capacities(1.3, 0.4, 40)[static_cast<std::size_t>(k)] ==
          doctest::Approx(polydisk_oracle(1.3, 0.4, k)).epsilon(1e-14));
  }
}

TEST_CASE("two unit balls combine by max-plus") {
  const std::vector<double> one = ball_capacities(1.0, 6);
  const std::vector<double> got = union_capacities({one, one});
  const std::vector<double> want = {0, 1, 2, 2, 3, 3, 4};
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(k);
    CHECK(got[k] == want[k]);
  }
}

TEST_CASE("three-part union agrees with explicit composition search") {
  const std::vector<double> p1 = ball_capacities(1.0, 12);
  const std::vector<double> p2 = ellipsoid_capacities(0.7, 1.9, 12);
  const std::vector<double> p3 = polydisk_capacities(1.1, 0.6, 12);
  const std::vector<double> got = union_capacities({p1, p2, p3});
  for (int k = 0; k <= 12; ++k) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; i + j <= k; ++j) {
        best = std::max(best, p1[static_cast<std::size_t>(i)] +
                                  p2[static_cast<std::size_t>(j)] +
                                  p3[static_cast<std::size_t>(k - i - j)]);
      }
    }
    CAPTURE(k);
    CHECK(got[static_cast<std::size_t>(k)] == doctest::Approx(best).epsilon(1e-13));
  }
  // Fold order must not matter beyond rounding.
  const std::vector<double> swapped = union_capacities({p3, p1, p2});
  for (std::size_t k = 0; k < got.size(); ++k) {
    CHECK(got[k] == doctest::Approx(swapped[k]).epsilon(1e-12));
  }
}

TEST_CASE("the 4 x 3sqrt3 ellipsoid splits into balls plus a residue") {
  // One round of the triangle expansion of the (4, 3sqrt3) triangle removes
  // the size-4 corner and leaves residues of sizes 3sqrt3-4 twice, with the
  // leftover triangle (12-6sqrt3, 3sqrt3-4); capacities are preserved.
  const double s3 = std::sqrt(3.0);
  const int kmax = 60;
  const std::vector<double> lhs = ellipsoid_capacities(4.0, 3.0 * s3, kmax);
  const std::vector<double> rhs = union_capacities({
      ball_capacities(4.0, kmax),
      ball_capacities(3.0 * s3 - 4.0, kmax),
      ball_capacities(3.0 * s3 - 4.0, kmax),
      ellipsoid_capacities(12.0 - 6.0 * s3, 3.0 * s3 - 4.0, kmax),
  });
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    CAPTURE(k);
    CHECK(rhs[k] == doctest::Approx(lhs[k]).epsilon(1e-12));
  }
}

TEST_CASE("triangle region capacities equal the matching ellipsoid") {
  const std::vector<double> lhs = concave_capacities(ConcaveRegion::triangle(2.0, 3.0), 50);
  const std::vector<double> rhs = ellipsoid_capacities(2.0, 3.0, 50);
  REQUIRE(lhs.size() == rhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    CAPTURE(k);
    CHECK(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-12));
  }
}

TEST_CASE("bidisk region: first two capacities") {
  const std::vector<double> got = concave_capacities(ConcaveRegion::omega0(8192), 2);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == 0.0);
  CHECK(got[1] == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(got[2] == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-6));
}

TEST_CASE("bidisk region capacities are dominated by the target ellipsoid") {
  const int kmax = 60;
  const std::vector<double> target =
      ellipsoid_capacities(4.0, 3.0 * std::sqrt(3.0), kmax);
  const std::vector<double> source =
      concave_capacities(ConcaveRegion::omega0(8192), kmax);
  const auto dom = dominates(target, source, 1e-6);
  CHECK(dom.ok);
  CHECK(dom.first_violation == -1);
}

TEST_CASE("dominance reports the first violating index") {
  const auto dom = dominates(ellipsoid_capacities(2.0, 3.0, 20),
                             ball_capacities(2.2, 20), 0.0);
  CHECK_FALSE(dom.ok);
  CHECK(dom.first_violation == 1);  // c_1: 2.2 > 2
}

TEST_CASE("capacities scale linearly and grow with the domain") {
  const double lam = 1.37;
  const std::vector<double> e = ellipsoid_capacities(2.0, 3.0, 30);
  const std::vector<double> el = ellipsoid_capacities(2.0 * lam, 3.0 * lam, 30);
  const std::vector<double> p = polydisk_capacities(1.1, 0.6, 30);
  const std::vector<double> pl = polydisk_capacities(1.1 * lam, 0.6 * lam, 30);
  for (std::size_t k = 0; k < e.size(); ++k) {
    CAPTURE(k);
    CHECK(el[k] == doctest::Approx(lam * e[k]).epsilon(1e-13));
    CHECK(pl[k] == doctest::Approx(lam * p[k]).epsilon(1e-13));
  }
  // Containment E(2,3) in E(2.5,3.5) forces elementwise dominance.
  CHECK(dominates(ellipsoid_capacities(2.5, 3.5, 100),
                  ellipsoid_capacities(2.0, 3.0, 100), 0.0)
            .ok);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ellipsoid_capacities(0.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(polydisk_capacities(1.0, -1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(ball_capacities(1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(union_capacities({}), std::invalid_argument);
  CHECK_THROWS_AS(
      union_capacities({ball_capacities(1.0, 3), ball_capacities(1.0, 4)}),
      std::invalid_argument);
  CHECK_THROWS_AS(dominates({0.0, 1.0}, {0.0}, 0.0), std::invalid_argument);
}
