#include "billiard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "geometry.hpp"

namespace bidisk::billiard {
namespace {

constexpr double kSlopeBracketWidth = 1e-14;   // u_bar bisection target
constexpr double kSlopeResidual = 1e-12;       // residual allowed at u_bar
constexpr double kTurningResidual = 1e-13;     // residual allowed at u1, u0
constexpr double kQuadratureTol = 1e-10;       // successive-estimate agreement
constexpr int kQuadratureMinNodes = 16;
constexpr int kQuadratureMaxNodes = 65536;
constexpr double kEventTol = 1e-12;            // event location in tau
constexpr double kMaxEventTime = 1000.0;       // tau budget for one period

double require_valid_momentum(const BilliardModel& m, double v, const char* who) {
  if (!std::isfinite(v) || std::abs(v) >= m.max_momentum) {
    std::ostringstream msg;
    msg << who << ": |v| must be below the maximum momentum " << m.max_momentum;
    throw std::invalid_argument(msg.str());
  }
  return v;
}

// Bisects fn (which changes sign from lo to hi) until the bracket is narrower
// than width or floating point runs out of midpoints.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double width) {
  double flo = fn(lo);
  for (int i = 0; i < 200 && hi - lo > width; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fmid = fn(mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], cached:
// node counts repeat across integrals, and a 65536-point build is costly.
struct QuadratureRule {
  std::vector<double> node;
  std::vector<double> weight;
};

const QuadratureRule& legendre_rule(int n) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex lock;
  std::scoped_lock guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  QuadratureRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton's method on P_n from the Chebyshev-like initial guess; the
    // recurrence gives P_n and its derivative together.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.node[i] = -x;
    rule.weight[i] = w;
    rule.node[n - 1 - i] = x;
    rule.weight[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Integrates fn over theta in [-pi/2, pi/2], doubling the Gauss-Legendre node
// count until every component of two successive estimates agrees to
// kQuadratureTol. fn returns N integrand components evaluated at one theta.
template <int N, class Fn>
std::array<double, N> integrate_theta(Fn&& fn) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  std::array<double, N> prev{};
  double last_diff = 0.0;
  for (int n = kQuadratureMinNodes; n <= kQuadratureMaxNodes; n *= 2) {
    const QuadratureRule& rule = legendre_rule(n);
    std::array<double, N> acc{};
    for (int i = 0; i < n; ++i) {
      std::array<double, N> value = fn(kHalfPi * rule.node[i]);
      for (int k = 0; k < N; ++k) acc[k] += kHalfPi * rule.weight[i] * value[k];
    }
    if (n > kQuadratureMinNodes) {
      last_diff = 0.0;
      for (int k = 0; k < N; ++k) last_diff = std::max(last_diff, std::abs(acc[k] - prev[k]));
      if (last_diff < kQuadratureTol) return acc;
    }
    prev = acc;
  }
  std::ostringstream msg;
  msg << "quadrature did not converge: last refinement still changed the result by "
      << last_diff;
  throw std::runtime_error(msg.str());
}

// Shared geometry of the substitution u = c + h sin(theta) on [u1, u0]. The
// distances to the endpoints are evaluated through half-angle squares, which
// stay accurate where u - u1 or u0 - u underflows the direct difference.
struct Substitution {
  double u1, h;
  struct Point {
    double u;        // current abscissa
    double from_u1;  // u - u1, exact form
    double to_u0;    // u0 - u, exact form
  };
  Point at(double theta) const {
    double phi = std::numbers::pi / 4.0 - 0.5 * theta;
    double c = std::cos(phi);
    double s = std::sin(phi);
    Point p;
    p.from_u1 = 2.0 * h * c * c;
    p.to_u0 = 2.0 * h * s * s;
    p.u = u1 + p.from_u1;
    return p;
  }
};

double momentum_sq_curvature(const BilliardModel& m, double x) {
  return -m.epsilon * (2.0 * m.u.slope(x) + m.u.curvature(x) * x);
}

// Smooth positive factor with the endpoint zeros of momentum_sq(u) - v^2
// divided out; the square root of the radicand is h cos(theta) sqrt(S).
// Within a sliver of either turning point the direct difference
// momentum_sq(u) - v^2 falls below the rounding granularity of momentum_sq
// itself (worst when v is close to M and the interval is short), so there S
// is evaluated from a second-order Taylor expansion at that endpoint.
double smooth_radicand(const BilliardModel& m, const TurningPoints& tp,
                       const Substitution::Point& p, double vsq) {
  constexpr double kEndpointBand = 1e-6;
  const double width = p.from_u1 + p.to_u0;
  if (p.from_u1 < kEndpointBand * width) {
    const double rise = momentum_sq_slope(m, tp.u1) +
                        0.5 * momentum_sq_curvature(m, tp.u1) * p.from_u1;
    return std::max(rise / p.to_u0, 0.0);
  }
  if (p.to_u0 < kEndpointBand * width) {
    const double drop = -momentum_sq_slope(m, tp.u0) +
                        0.5 * momentum_sq_curvature(m, tp.u0) * p.to_u0;
    return std::max(drop / p.from_u1, 0.0);
  }
  const double s = (momentum_sq(m, p.u) - vsq) / (p.from_u1 * p.to_u0);
  return std::max(s, 0.0);
}

// (G, alpha / v) integrals for 0 < v < M, or the G integral alone for v = 0.
GAlpha positive_g_alpha(const BilliardModel& m, double v) {
  TurningPoints tp = turning_points(m, v);
  Substitution sub{tp.u1, 0.5 * (tp.u0 - tp.u1)};
  double vsq = v * v;
  if (v == 0.0) {
    auto g_only = integrate_theta<1>([&](double theta) -> std::array<double, 1> {
      Substitution::Point p = sub.at(theta);
      return {reeb_rate(m, p.u) / std::sqrt(smooth_radicand(m, tp, p, vsq))};
    });
    return {g_only[0], std::numbers::pi};
  }
  auto both = integrate_theta<2>([&](double theta) -> std::array<double, 2> {
    Substitution::Point p = sub.at(theta);
    double root = std::sqrt(smooth_radicand(m, tp, p, vsq));
    return {reeb_rate(m, p.u) / root, v / (p.u * root)};
  });
  GAlpha result{both[0], both[1]};
  if (!(result.alpha > 0.0 && result.alpha < 2.0 * std::numbers::pi)) {
    throw std::runtime_error("swept angle left (0, 2 pi); the potential is outside the supported shape");
  }
  return result;
}

OdeState ode_derivative(const BilliardModel& m, const OdeState& s) {
  double usq = s.qx * s.qx + s.qy * s.qy;
  double pull = -m.epsilon * m.u.slope(usq);
  OdeState d;
  d.qx = s.px;
  d.qy = s.py;
  d.px = pull * s.qx;
  d.py = pull * s.qy;
  d.t_reeb = reeb_rate(m, usq);
  d.theta = (s.qx * s.py - s.qy * s.px) / usq;
  return d;
}

OdeState blend(const OdeState& s, double scale, const OdeState& d) {
  return {s.qx + scale * d.qx,       s.qy + scale * d.qy,
          s.px + scale * d.px,       s.py + scale * d.py,
          s.t_reeb + scale * d.t_reeb, s.theta + scale * d.theta};
}

double radial_speed_sign(const OdeState& s) { return s.qx * s.px + s.qy * s.py; }

// Locates the zero of q.p inside the step [base, base advanced by dt] given
// that the sign changes across it, by a secant iteration that always keeps a
// bracket; returns the state at the refined offset.
OdeState refine_event(const BilliardModel& m, const OdeState& base, double dt, double g_lo,
                      double g_hi) {
  double lo = 0.0;
  double hi = dt;
  for (int i = 0; i < 80 && hi - lo > kEventTol; ++i) {
    double denom = g_hi - g_lo;
    double t = denom != 0.0 ? hi - g_hi * (hi - lo) / denom : 0.5 * (lo + hi);
    if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
    double g_t = radial_speed_sign(ode_step(m, base, t));
    if ((g_t <= 0.0) == (g_lo <= 0.0)) {
      lo = t;
      g_lo = g_t;
    } else {
      hi = t;
      g_hi = g_t;
    }
  }
  return ode_step(m, base, 0.5 * (lo + hi));
}

}  // namespace

Potential default_potential() {
  Potential u;
  u.value = [](double x) { return 0.5 / (1.0 - x); };
  u.slope = [](double x) { double d = 1.0 - x; return 0.5 / (d * d); };
  u.curvature = [](double x) { double d = 1.0 - x; return 1.0 / (d * d * d); };
  return u;
}

double momentum_sq(const BilliardModel& m, double x) {
  return x * (1.0 - m.epsilon * m.u.value(x));
}

double momentum_sq_slope(const BilliardModel& m, double x) {
  return 1.0 - m.epsilon * (m.u.value(x) + m.u.slope(x) * x);
}

double reeb_rate(const BilliardModel& m, double x) {
  return 0.5 * (1.0 - m.epsilon * (m.u.value(x) - m.u.slope(x) * x));
}

BilliardModel make_model(double epsilon) { return make_model(epsilon, default_potential()); }

BilliardModel make_model(double epsilon, Potential u) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("make_model: epsilon must lie in (0, 1)");
  }
  if (!u.value || !u.slope || !u.curvature) {
    throw std::invalid_argument("make_model: potential needs value, slope, and curvature");
  }
  if (!(epsilon * u.value(0.0) < 1.0)) {
    throw std::invalid_argument("make_model: epsilon * U(0) must stay below 1");
  }
  for (double probe = 0.05; probe < 1.0; probe += 0.05) {
    if (!(u.slope(probe) > 0.0) || !(u.curvature(probe) > 0.0)) {
      throw std::invalid_argument("make_model: potential must be increasing and convex");
    }
  }
  if (!(u.value(1.0 - 1e-6) > 1e3)) {
    throw std::invalid_argument("make_model: potential must grow without bound near 1");
  }

  BilliardModel m;
  m.epsilon = epsilon;
  m.u = std::move(u);

  double hi = 1.0 - 1e-9;
  if (!(momentum_sq_slope(m, hi) < 0.0)) {
    throw std::runtime_error("make_model: momentum profile has no interior maximum");
  }
  m.u_bar = bisect([&](double x) { return momentum_sq_slope(m, x); }, 0.0, hi,
                   kSlopeBracketWidth);
  if (std::abs(momentum_sq_slope(m, m.u_bar)) > kSlopeResidual) {
    throw std::runtime_error("make_model: stationary point of the momentum profile not resolved");
  }
  m.max_momentum = std::sqrt(momentum_sq(m, m.u_bar));
  if (!(m.max_momentum > 0.0)) {
    throw std::runtime_error("make_model: maximum momentum must be positive");
  }
  return m;
}

TurningPoints turning_points(const BilliardModel& m, double v) {
  require_valid_momentum(m, v, "turning_points");
  double vsq = v * v;
  TurningPoints tp;

  if (vsq == 0.0) {
    tp.u1 = 0.0;
  } else {
    tp.u1 = bisect([&](double x) { return momentum_sq(m, x) - vsq; }, 0.0, m.u_bar, 0.0);
  }

  // The profile drops below any v^2 before 1: expand the bracket toward 1
  // until it does (the default potential needs no expansion).
  double hi = 1.0 - 1e-9;
  while (momentum_sq(m, hi) >= vsq && 1.0 - hi > 1e-14) hi = 1.0 - 0.1 * (1.0 - hi);
  if (momentum_sq(m, hi) >= vsq) {
    throw std::runtime_error("turning_points: outer turning point not bracketed");
  }
  tp.u0 = bisect([&](double x) { return momentum_sq(m, x) - vsq; }, m.u_bar, hi, 0.0);

  if (std::abs(momentum_sq(m, tp.u1) - vsq) > kTurningResidual ||
      std::abs(momentum_sq(m, tp.u0) - vsq) > kTurningResidual) {
    throw std::runtime_error("turning_points: residual above tolerance");
  }
  return tp;
}

GAlpha g_alpha(const BilliardModel& m, double v) {
  require_valid_momentum(m, v, "g_alpha");
  GAlpha at_abs = positive_g_alpha(m, std::abs(v));
  if (v < 0.0) at_abs.alpha = 2.0 * std::numbers::pi - at_abs.alpha;
  return at_abs;
}

double sigma(const BilliardModel& m, double v) {
  require_valid_momentum(m, v, "sigma");
  if (v < 0.0) return sigma(m, -v) - 2.0 * std::numbers::pi * v;
  TurningPoints tp = turning_points(m, v);
  Substitution sub{tp.u1, 0.5 * (tp.u0 - tp.u1)};
  double vsq = v * v;
  auto result = integrate_theta<1>([&](double theta) -> std::array<double, 1> {
    Substitution::Point p = sub.at(theta);
    double c = std::cos(theta);
    return {sub.h * sub.h * c * c * std::sqrt(smooth_radicand(m, tp, p, vsq)) / p.u};
  });
  return result[0];
}

MomentProfile moment_profile(const BilliardModel& m, int n) {
  if (n < 3) throw std::invalid_argument("moment_profile: need at least 3 samples");
  MomentProfile profile;
  profile.epsilon = m.epsilon;
  profile.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    double t = 2.0 * (i + 0.5) / n - 1.0;
    double v = m.max_momentum * std::sin(std::numbers::pi * t / 2.0);
    GAlpha ga = g_alpha(m, v);
    ProfileSample row;
    row.v = v;
    row.g = ga.g;
    row.alpha = ga.alpha;
    row.rho1 = ga.g - ga.alpha * v;
    row.rho2 = row.rho1 + 2.0 * std::numbers::pi * v;
    profile.samples.push_back(row);
  }
  return profile;
}

OdeState ode_step(const BilliardModel& m, const OdeState& s, double dtau) {
  OdeState k1 = ode_derivative(m, s);
  OdeState k2 = ode_derivative(m, blend(s, 0.5 * dtau, k1));
  OdeState k3 = ode_derivative(m, blend(s, 0.5 * dtau, k2));
  OdeState k4 = ode_derivative(m, blend(s, dtau, k3));
  OdeState sum = blend(blend(blend(k1, 2.0, k2), 2.0, k3), 1.0, k4);
  return blend(s, dtau / 6.0, sum);
}

GAlpha ode_oracle(const BilliardModel& m, double v, double dt) {
  if (!(v > 0.0)) throw std::invalid_argument("ode_oracle: v must be positive");
  require_valid_momentum(m, v, "ode_oracle");
  if (!(dt > 0.0)) throw std::invalid_argument("ode_oracle: dt must be positive");

  TurningPoints tp = turning_points(m, v);
  OdeState s;
  s.qx = std::sqrt(tp.u0);
  s.py = v / s.qx;

  // From the outer turning point q.p dips negative, crosses zero at the inner
  // turning point, and crosses back at the next outer one.
  long max_steps = static_cast<long>(kMaxEventTime / dt);
  double g_prev = 0.0;
  int crossings = 0;
  double alpha = 0.0;
  for (long step = 0; step < max_steps; ++step) {
    OdeState next = ode_step(m, s, dt);
    double g_next = radial_speed_sign(next);
    if (step > 0 && g_prev != 0.0 && (g_next <= 0.0) != (g_prev <= 0.0)) {
      OdeState event = refine_event(m, s, dt, g_prev, g_next);
      ++crossings;
      if (crossings == 1) {
        alpha = 2.0 * event.theta;
      } else {
        return {event.t_reeb, alpha};
      }
    }
    s = next;
    g_prev = g_next;
  }
  throw std::runtime_error("ode_oracle: radial period not completed within the time budget");
}

double limit_curve_error(const BilliardModel& m, int n) {
  if (n < 3) throw std::invalid_argument("limit_curve_error: need at least 3 grid points");
  double cutoff = m.max_momentum * (1.0 - 1e-6);
  double worst = 0.0;
  for (int j = 1; j <= n; ++j) {
    double alpha0 = 2.0 * std::numbers::pi * j / (n + 1);
    double v = std::cos(alpha0 / 2.0);
    if (std::abs(v) > cutoff) continue;
    double limit = geom::omega0_point(alpha0).x;
    worst = std::max(worst, std::abs(sigma(m, v) - limit));
  }
  return worst;
}

}  // namespace bidisk::billiard
