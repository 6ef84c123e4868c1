#pragma once

#include <functional>
#include <vector>

namespace bidisk::billiard {

// Confining potential on [0, 1): smooth, increasing, convex, and unbounded as
// the argument approaches 1. All three callables must accept any u in [0, 1).
struct Potential {
  std::function<double(double)> value;
  std::function<double(double)> slope;
  std::function<double(double)> curvature;
};

// The shipped default, U(u) = 1 / (2 (1 - u)), with closed-form derivatives.
Potential default_potential();

// A smoothed circular-billiard system at a fixed smoothing strength. The
// radial motion of a unit-energy orbit with angular momentum v oscillates
// between the two roots of momentum_sq(u) = v^2, so orbits exist exactly for
// |v| < max_momentum, and max_momentum^2 is the maximum of momentum_sq,
// attained at u_bar.
struct BilliardModel {
  double epsilon = 0.0;   // smoothing strength, in (0, 1)
  Potential u;            // confining potential U
  double u_bar = 0.0;     // argmax of momentum_sq on (0, 1)
  double max_momentum = 0.0;  // sqrt(momentum_sq(u_bar)), written M below
};

// Builds a model, locating u_bar by bisection on the slope of momentum_sq
// (bracket shrunk below 1e-14) and checking the potential's shape at probe
// points. Throws std::invalid_argument for epsilon outside (0, 1) or a
// potential violating the shape conditions, std::runtime_error if the slope
// never changes sign.
BilliardModel make_model(double epsilon);
BilliardModel make_model(double epsilon, Potential u);

// Squared angular momentum of a unit-energy orbit whose radial turning point
// sits at squared radius x: momentum_sq(x) = x (1 - epsilon U(x)).
double momentum_sq(const BilliardModel& m, double x);
double momentum_sq_slope(const BilliardModel& m, double x);

// Rate of return-map time per unit of flow time at squared radius x:
// (1 - epsilon U(x) + epsilon U'(x) x) / 2.
double reeb_rate(const BilliardModel& m, double x);

// Inner and outer radial turning points of the orbit with angular momentum v:
// the roots of momentum_sq(x) = v^2 on either side of u_bar, each bisected
// until |momentum_sq(u) - v^2| < 1e-13. v = 0 gives u1 = 0 exactly. Throws
// std::invalid_argument when |v| >= max_momentum.
struct TurningPoints {
  double u1 = 0.0;  // inner, in [0, u_bar)
  double u0 = 0.0;  // outer, in (u_bar, 1)
};
TurningPoints turning_points(const BilliardModel& m, double v);

// Return time G and swept angle alpha of one radial period, as integrals over
// [u1, u0]:
//   G(v)     = integral of reeb_rate(u) / sqrt(momentum_sq(u) - v^2)
//   alpha(v) = v * integral of 1 / (u sqrt(momentum_sq(u) - v^2))
// with the conventions alpha(0) = pi, G(-v) = G(v), alpha(-v) = 2 pi -
// alpha(v). The endpoint singularities are removed by the substitution
// u = c + h sin(theta), and the smooth theta-integrals are evaluated by
// Gauss-Legendre rules whose node count doubles until two successive
// estimates agree to 1e-10 (at most 65536 nodes; non-convergence throws
// std::runtime_error carrying the last difference). Throws
// std::invalid_argument when |v| >= max_momentum.
struct GAlpha {
  double g = 0.0;
  double alpha = 0.0;
};
GAlpha g_alpha(const BilliardModel& m, double v);

// The action coordinate sigma(v) = integral over [u1, u0] of
// sqrt(momentum_sq(u) - v^2) / u, evaluated with the same substitution (the
// integrand vanishes at the endpoints). Equals G(v) - alpha(v) v; negative v
// is mapped through sigma(v) = sigma(-v) - 2 pi v. Validity and errors as in
// g_alpha.
double sigma(const BilliardModel& m, double v);

// One row of the action-profile table at angular momentum v. rho2 is built
// from rho1 as rho1 + 2 pi v, so the gap is exactly 2 pi v; algebraically
// rho1 = G - alpha v and rho2 = G + (2 pi - alpha) v.
struct ProfileSample {
  double v = 0.0;
  double g = 0.0;
  double alpha = 0.0;
  double rho1 = 0.0;
  double rho2 = 0.0;
};

struct MomentProfile {
  double epsilon = 0.0;
  std::vector<ProfileSample> samples;  // ascending in v
};

// Samples the profile at n momenta v_i = M sin(pi t_i / 2) with t_i the
// midpoints of a uniform grid on (-1, 1); the sine map clusters samples near
// +-M, where rho1 collapses to 0. Throws std::invalid_argument for n < 3.
MomentProfile moment_profile(const BilliardModel& m, int n);

// State of the planar flow q' = p, p' = -epsilon U'(|q|^2) q, advanced in
// flow time tau while accumulating return-map time (rate reeb_rate(|q|^2))
// and the polar angle swept by q.
struct OdeState {
  double qx = 0.0;
  double qy = 0.0;
  double px = 0.0;
  double py = 0.0;
  double t_reeb = 0.0;
  double theta = 0.0;
};

// One classical fourth-order Runge-Kutta step of size dtau.
OdeState ode_step(const BilliardModel& m, const OdeState& s, double dtau);

// Independent time-domain measurement of (G, alpha): integrates the flow from
// the outer turning point (|q| = sqrt(u0), q.p = 0, angular momentum v) with
// fixed step dt, locates the next radial minimum and maximum by sign changes
// of q.p refined to 1e-12 in tau by a bracketed secant, and returns the
// return-map time between the two maxima as G and twice the angle swept up to
// the minimum as alpha. Requires 0 < v < max_momentum and dt > 0; throws
// std::runtime_error if the events are not found within 1000 units of tau.
GAlpha ode_oracle(const BilliardModel& m, double v, double dt);

// Sup, over the grid alpha0_j = 2 pi j / (n + 1) restricted to
// |cos(alpha0/2)| <= max_momentum (1 - 1e-6), of the distance between
// sigma(cos(alpha0/2)) and the first coordinate of the limiting boundary
// curve at alpha0. Decreases as epsilon does. Throws std::invalid_argument
// for n < 3.
double limit_curve_error(const BilliardModel& m, int n);

}  // namespace bidisk::billiard
