// Acceptance suite: every shipped claim gets one PASS/FAIL line with its
// tolerances pinned here. Exits nonzero when any criterion fails. Links the
// core library directly; no test framework.

#include "billiard.hpp"
#include "capacities.hpp"
#include "embedding.hpp"
#include "geometry.hpp"
#include "packing.hpp"
#include "weights.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

const double kRoot3x3 = 3.0 * std::sqrt(3.0);        // 5.19615...
const double kSecondWeight = kRoot3x3 - 4.0;         // 1.19615...
const double kThirdWeight = 4.0 * std::sqrt(2.0) - kRoot3x3;  // 0.46070...

int g_failures = 0;

void report(int index, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", index, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

template <class Fn>
void criterion(int index, Fn&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(index, false, std::string("exception: ") + e.what());
  }
}

// 1. First five triangle weights of the sampled model region.
void c1_weights() {
  const auto start = Clock::now();
  const auto region = bidisk::geom::ConcaveRegion::omega0(8192);
  const auto w = bidisk::weights::weight_sequence(region, 5);
  const double elapsed = seconds_since(start);

  bool ok = w.size() == 5;
  const double expected[5] = {4.0, kSecondWeight, kSecondWeight, kThirdWeight,
                              kThirdWeight};
  const double tolerance[5] = {1e-5, 1e-4, 1e-4, 1e-3, 1e-3};
  double worst = 0.0;
  for (int i = 0; ok && i < 5; ++i) {
    const double err = std::abs(w[i] - expected[i]);
    worst = std::max(worst, err / tolerance[i]);
    ok = ok && err <= tolerance[i];
  }
  ok = ok && elapsed < 5.0;
  report(1, ok,
         fmt("five weights vs closed forms 4, 3sqrt3-4, 4sqrt2-3sqrt3 "
             "(worst err %.1e of budget, %.2f s < 5 s)",
             worst, elapsed));
}

// 2. First two capacities of the model region.
void c2_first_capacities() {
  const auto region = bidisk::geom::ConcaveRegion::omega0(8192);
  const auto caps = bidisk::caps::concave_capacities(region, 2);
  const double e1 = std::abs(caps[1] - 4.0);
  const double e2 = std::abs(caps[2] - kRoot3x3);
  const bool ok = e1 <= 1e-4 && e2 <= 1e-4;
  report(2, ok,
         fmt("c1 = 4 (err %.1e) and c2 = 3sqrt3 (err %.1e), tol 1e-4", e1, e2));
}

// 3. Model-region capacities never exceed the enclosing ellipsoid's.
void c3_dominance() {
  const auto start = Clock::now();
  const auto region = bidisk::geom::ConcaveRegion::omega0(8192);
  const auto src = bidisk::caps::concave_capacities(region, 200);
  const auto tgt = bidisk::caps::ellipsoid_capacities(4.0, kRoot3x3, 200);
  double worst = -1e300;
  for (int k = 0; k <= 200; ++k) worst = std::max(worst, src[k] - tgt[k]);
  const double elapsed = seconds_since(start);
  const bool ok = worst <= 1e-6 && elapsed < 30.0;
  report(3, ok,
         fmt("region caps <= ellipsoid(4, 3sqrt3) caps + 1e-6 for k <= 200 "
             "(max excess %.1e, %.2f s < 30 s)",
             worst, elapsed));
}

// 4. Ball-decomposition identity for the enclosing ellipsoid.
void c4_union_identity() {
  const int kmax = 200;
  const std::vector<std::vector<double>> parts = {
      bidisk::caps::ball_capacities(4.0, kmax),
      bidisk::caps::ball_capacities(kSecondWeight, kmax),
      bidisk::caps::ball_capacities(kSecondWeight, kmax),
      bidisk::caps::ellipsoid_capacities(12.0 - 6.0 * std::sqrt(3.0),
                                         kSecondWeight, kmax),
  };
  const auto joined = bidisk::caps::union_capacities(parts);
  const auto target = bidisk::caps::ellipsoid_capacities(4.0, kRoot3x3, kmax);
  double worst = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    worst = std::max(worst, std::abs(joined[k] - target[k]));
  }
  const bool ok = worst <= 1e-9;
  report(4, ok,
         fmt("union of four balls/ellipsoids matches ellipsoid(4, 3sqrt3) "
             "caps for k <= 200 (max |diff| %.1e, tol 1e-9)",
             worst));
}

// 5. Closed-form verdicts agree with capacity obstructions on a grid.
void c5_grid_consistency() {
  const auto region = bidisk::geom::ConcaveRegion::omega0(8192);
  const auto src = bidisk::caps::concave_capacities(region, 100);

  std::vector<double> grid;
  for (int i = 0; i <= 16; ++i) grid.push_back(3.0 + 0.25 * i);
  const auto near_threshold = [](double p) {
    return std::abs(p - 4.0) < 1e-3 || std::abs(p - kRoot3x3) < 1e-3;
  };

  int targets = 0;
  int mismatches = 0;
  const auto check_one = [&](bidisk::embed::TargetKind kind, double a,
                             double b, const std::vector<double>& tgt) {
    ++targets;
    const auto closed = bidisk::embed::bidisk_into(kind, a, b);
    const auto dom = bidisk::caps::dominates(tgt, src, 1e-6);
    const bool consistent = closed.embeds == bidisk::embed::Embeds::Yes
                                ? dom.ok
                                : (!dom.ok && dom.first_violation <= 100);
    if (!consistent) ++mismatches;
  };

  for (double a : grid) {
    if (near_threshold(a)) continue;
    check_one(bidisk::embed::TargetKind::Ball, a, 0.0,
              bidisk::caps::ball_capacities(a, 100));
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    for (size_t j = i; j < grid.size(); ++j) {
      const double a = grid[i];
      const double b = grid[j];
      if (near_threshold(a) || near_threshold(b)) continue;
      check_one(bidisk::embed::TargetKind::Ellipsoid, a, b,
                bidisk::caps::ellipsoid_capacities(a, b, 100));
      check_one(bidisk::embed::TargetKind::Polydisk, a, b,
                bidisk::caps::polydisk_capacities(a, b, 100));
    }
  }
  const bool ok = mismatches == 0 && targets > 200;
  report(5, ok,
         fmt("closed-form vs capacity verdicts on the parameter grid: "
             "%d targets, %d mismatches",
             targets, mismatches));
}

// 6. The model region contains the two touching triangles.
void c6_inclusions() {
  const auto region = bidisk::geom::ConcaveRegion::omega0(8192);
  const auto round = bidisk::embed::contains_ellipsoid(region, 4.0, 4.0);
  const auto oblong =
      bidisk::embed::contains_ellipsoid(region, kRoot3x3, kRoot3x3 / 2.0);
  const double residual = std::abs(oblong.min_value - 1.0);
  const bool ok = round.contained && oblong.contained && residual < 1e-5;
  report(6, ok,
         fmt("triangle(4,4) and triangle(3sqrt3, 3sqrt3/2) fit under the "
             "chain; tangency residual %.1e < 1e-5",
             residual));
}

// 7. The explicit square-to-disk map is symplectic and lands inside.
void c7_explicit_map() {
  const auto rep = bidisk::embed::explicit_map_check(1000, 20240816u);
  const bool ok = rep.samples == 1000 && rep.failures == 0 &&
                  rep.max_symplectic_error <= 1e-6 && rep.max_moment <= 4.0;
  report(7, ok,
         fmt("1000 samples: %d failures, max symplectic error %.1e <= 1e-6, "
             "max factor area %.6f <= 4",
             rep.failures, rep.max_symplectic_error, rep.max_moment));
}

// 8. Region area and the convergence of the weight expansion to it.
void c8_area_budget() {
  const auto region = bidisk::geom::ConcaveRegion::omega0(8192);
  const double area = region.area();
  const double area_err = std::abs(area - std::numbers::pi * std::numbers::pi);

  const auto w = bidisk::weights::weight_sequence(region, 2000);
  bool monotone = true;
  bool bounded = true;
  double sum = 0.0;
  for (double x : w) {
    const double next = sum + 0.5 * x * x;
    monotone = monotone && next >= sum;
    sum = next;
    bounded = bounded && sum <= area;
  }
  const double fraction = sum / area;
  const bool ok = area_err <= 1e-4 && monotone && bounded &&
                  w.size() == 2000 && fraction >= 0.995;
  report(8, ok,
         fmt("area = pi^2 (err %.1e <= 1e-4); 2000-weight energy monotone, "
             "bounded, and covers %.4f of the area (>= 0.995)",
             area_err, fraction));
}

// 9. Chain-based capacities of an exact triangle match the ellipsoid's.
void c9_triangle_oracle() {
  const auto tri = bidisk::geom::ConcaveRegion::triangle(2.0, 3.0);
  const auto lhs = bidisk::caps::concave_capacities(tri, 50);
  const auto rhs = bidisk::caps::ellipsoid_capacities(2.0, 3.0, 50);
  double worst = 0.0;
  for (int k = 0; k <= 50; ++k) {
    worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
  }
  const bool ok = worst <= 1e-9;
  report(9, ok,
         fmt("triangle(2,3) caps equal ellipsoid(2,3) caps for k <= 50 "
             "(max |diff| %.1e, tol 1e-9)",
             worst));
}

// 10. Quadrature profile values against independent flow integration.
void c10_quadrature_vs_flow() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (double eps : {0.4, 0.2, 0.1}) {
    const auto m = bidisk::billiard::make_model(eps);
    for (double f : {0.2, 0.4, 0.6, 0.8}) {
      const double v = f * m.max_momentum;
      const auto quad = bidisk::billiard::g_alpha(m, v);
      const auto ode = bidisk::billiard::ode_oracle(m, v, 1e-3);
      worst = std::max(worst, std::abs(quad.g - ode.g) / std::abs(ode.g));
      worst = std::max(
          worst, std::abs(quad.alpha - ode.alpha) / std::abs(ode.alpha));
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = worst <= 1e-4 && elapsed < 60.0;
  report(10, ok,
         fmt("12 (eps, v) pairs: max relative deviation %.1e <= 1e-4 "
             "(%.2f s < 60 s)",
             worst, elapsed));
}

// 11. Monotone convergence of the smoothed family to the limit region.
void c11_monotone_convergence() {
  const double eps_grid[4] = {0.4, 0.2, 0.1, 0.05};
  const auto limit = bidisk::geom::ConcaveRegion::omega0(4096);

  bool sigma_monotone = true;
  bool error_monotone = true;
  bool nested = true;
  double prev_sigma = 0.0;
  double prev_error = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto m = bidisk::billiard::make_model(eps_grid[i]);
    const double sig = bidisk::billiard::sigma(m, 0.3);
    const double err = bidisk::billiard::limit_curve_error(m, 129);
    if (i > 0) {
      sigma_monotone = sigma_monotone && sig > prev_sigma;
      error_monotone = error_monotone && err < prev_error;
    }
    prev_sigma = sig;
    prev_error = err;

    const auto profile = bidisk::billiard::moment_profile(m, 65);
    for (const auto& row : profile.samples) {
      nested = nested && limit.contains_point({row.rho1, row.rho2}, -1e-9);
    }
  }

  const auto fine = bidisk::billiard::make_model(0.01);
  const double sigma0 = bidisk::billiard::sigma(fine, 0.0);
  const bool near_two = std::abs(sigma0 - 2.0) <= 0.15;

  const bool ok = sigma_monotone && error_monotone && nested && near_two;
  report(11, ok,
         fmt("sigma(0.3) strictly grows as eps shrinks (%s), limit-curve "
             "error strictly shrinks (%s), profiles nest inside the chain "
             "(%s), sigma_{0.01}(0) = %.4f within 0.15 of 2",
             sigma_monotone ? "yes" : "no", error_monotone ? "yes" : "no",
             nested ? "yes" : "no", sigma0));
}

// 12. The shipped packing certificate and its mutation behave as claimed.
void c12_packing_certificate() {
  std::ifstream in(std::string(BIDISK_DATA_DIR) + "/packing_certificate.json",
                   std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto placement = bidisk::packing::placement_from_json(buf.str());

  const auto shipped = bidisk::packing::verify_placement(placement);
  std::string shipped_note;
  if (shipped.ok) {
    shipped_note = "shipped placement verifies at margin 1e-6";
  } else {
    shipped_note = fmt("shipped placement FAILS verification (%zu failure%s",
                       shipped.failures.size(),
                       shipped.failures.size() == 1 ? ": " : "s: ");
    shipped_note += shipped.failures.front().detail + ")";
  }

  auto mutated = placement;
  mutated.pieces[6].x0 -= 0.01;
  const auto broken = bidisk::packing::verify_placement(mutated);
  bool overlap_found = false;
  for (const auto& f : broken.failures) {
    overlap_found =
        overlap_found ||
        (f.kind == bidisk::packing::Failure::Kind::kOverlap &&
         f.piece_a == 5 && f.piece_b == 6);
  }

  const bool ok = shipped.ok && !broken.ok && overlap_found;
  report(12, ok,
         fmt("%s; shifting piece 6 by 0.01 is rejected with the overlapping "
             "pair (5, 6) identified (%s)",
             shipped_note.c_str(), overlap_found ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion(1, c1_weights);
  criterion(2, c2_first_capacities);
  criterion(3, c3_dominance);
  criterion(4, c4_union_identity);
  criterion(5, c5_grid_consistency);
  criterion(6, c6_inclusions);
  criterion(7, c7_explicit_map);
  criterion(8, c8_area_budget);
  criterion(9, c9_triangle_oracle);
  criterion(10, c10_quadrature_vs_flow);
  criterion(11, c11_monotone_convergence);
  criterion(12, c12_packing_certificate);

  if (g_failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d of 12 criteria failed\n", g_failures);
  return 1;
}
