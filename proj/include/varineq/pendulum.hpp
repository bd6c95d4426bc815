#pragma once

#include "varineq/interval.hpp"
#include "varineq/quadrature.hpp"
#include "varineq/test_function.hpp"
#include "varineq/trajectory.hpp"

namespace varineq {

/// Simple-pendulum parameters: mass, thread length, gravity, initial angle.
struct PendulumParams {
    double m = 1.0;
    double ell = 1.0;
    double g = 9.8;
    double theta0 = 1.5707963267948966; // pi/2

    void validate() const;          // m, ell, g positive and finite
    void validate_theta0() const;   // closed-form solution needs 0 < theta0 < pi
    double omega() const;           // sqrt(g / ell)
};

/// theta_ddot from the pendulum equation of motion: -(g/ell) sin(theta).
/// The rate argument does not enter; it is kept so the signature reads as
/// the ODE right-hand side for the (theta, theta_dot) system.
double pendulum_ode_rhs(const PendulumParams& p, double theta, double theta_dot);

/**
 * Classical fixed-step RK4 solution of the pendulum equation on the
 * interval, from (theta0, theta_dot0) at the left endpoint. steps >= 10.
 *
 * The returned trajectory interpolates the step points with cubic Hermite
 * segments (theta with theta_dot slopes, theta_dot with the exact ODE
 * accelerations as slopes); its second derivative is -(g/ell) sin(theta(x)),
 * exact from the equation of motion.
 */
Trajectory rk4_integrate(const PendulumParams& p, double theta0, double theta_dot0,
                         const Interval& interval, int steps);

/// theta, theta_dot, theta_ddot of the critical-energy solution
///   theta(t) = pi - 4 atan( e^{-omega t} tan(pi/4 - theta0/4) )
/// at time t. The derivatives are the closed forms obtained by
/// differentiating in t (no finite differences):
///   theta_dot  =  4 omega A / (1 + A^2)
///   theta_ddot = -4 omega^2 A (1 - A^2) / (1 + A^2)^2
/// with A(t) = e^{-omega t} tan(pi/4 - theta0/4).
struct SeparatrixState {
    double theta = 0.0;
    double theta_dot = 0.0;
    double theta_ddot = 0.0;
};

SeparatrixState separatrix_state(const PendulumParams& p, double t);

double separatrix_theta(const PendulumParams& p, double t);

/// Inverse of separatrix_theta: the time at which the solution reaches
/// theta. Requires theta0 <= theta < pi (the solution only approaches pi).
double separatrix_time(const PendulumParams& p, double theta);

/// theta_dot at t = 0 of the closed-form solution; equals
/// 2 omega cos(theta0/2), which is nonzero on (0, pi). Reported so callers
/// can see the solution starts with critical energy, not at rest.
double separatrix_initial_rate(const PendulumParams& p);

/// The closed-form solution as a Trajectory on the interval (x is time).
Trajectory separatrix_trajectory(const PendulumParams& p, const Interval& interval);

/// E = 1/2 m ell^2 theta_dot^2 - m g ell cos(theta). Conserved along
/// solutions; equals m g ell exactly on the critical-energy solution.
double pendulum_energy(const PendulumParams& p, double theta, double theta_dot);

/**
 * Margin of the pendulum-specialized inequality:
 *   ell * int phi'^2 dt  -  g * int cos(theta(t)) phi(t)^2 dt.
 * Positive when the inequality holds. Equals the general inequality margin
 * of the pendulum model divided by m*ell (the specialization divides out
 * m*ell and integrates phi phi'' by parts).
 */
double inequality38_margin(const PendulumParams& p, const Trajectory& theta_traj,
                           const TestFunction& tf, const QuadratureSpec& spec = {});

} // namespace varineq
