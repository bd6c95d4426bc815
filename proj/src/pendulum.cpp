#include "varineq/pendulum.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "varineq/hermite_grid.hpp"

namespace varineq {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

void PendulumParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m))
        throw ConfigError("pendulum mass m must be positive and finite");
    if (!(ell > 0.0) || !std::isfinite(ell))
        throw ConfigError("pendulum length ell must be positive and finite");
    if (!(g > 0.0) || !std::isfinite(g))
        throw ConfigError("gravitational acceleration g must be positive and finite");
}

void PendulumParams::validate_theta0() const {
    if (!(theta0 > 0.0) || !(theta0 < kPi))
        throw DomainError("the closed-form critical-energy solution requires "
                          "0 < theta0 < pi, got theta0 = " + std::to_string(theta0));
}

double PendulumParams::omega() const {
    validate();
    return std::sqrt(g / ell);
}

double pendulum_ode_rhs(const PendulumParams& p, double theta, double) {
    p.validate();
    return -(p.g / p.ell) * std::sin(theta);
}

Trajectory rk4_integrate(const PendulumParams& p, double theta0, double theta_dot0,
                         const Interval& interval, int steps) {
    p.validate();
    interval.validate();
    if (steps < 10)
        throw ConfigError("rk4 needs at least 10 steps, got " + std::to_string(steps));
    if (!std::isfinite(theta0) || !std::isfinite(theta_dot0))
        throw ConfigError("rk4 initial conditions must be finite");

    const double w2 = p.g / p.ell;
    const double h = interval.length() / steps;
    const std::size_t nodes = static_cast<std::size_t>(steps) + 1;

    std::vector<double> xs(nodes), th(nodes), thd(nodes), thdd(nodes);
    double a = theta0, b = theta_dot0;
    for (std::size_t i = 0; i < nodes; ++i) {
        xs[i] = interval.alpha + h * static_cast<double>(i);
        th[i] = a;
        thd[i] = b;
        thdd[i] = -w2 * std::sin(a);
        if (i + 1 == nodes) break;
        const double k1a = b, k1b = -w2 * std::sin(a);
        const double k2a = b + 0.5 * h * k1b, k2b = -w2 * std::sin(a + 0.5 * h * k1a);
        const double k3a = b + 0.5 * h * k2b, k3b = -w2 * std::sin(a + 0.5 * h * k2a);
        const double k4a = b + h * k3b, k4b = -w2 * std::sin(a + h * k3a);
        a += (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        b += (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    }
    xs.back() = interval.beta;

    auto angle = std::make_shared<HermiteGrid>(xs, th, thd);
    auto rate = std::make_shared<HermiteGrid>(std::move(xs), std::move(thd), std::move(thdd));

    Trajectory t;
    t.kind = "rk4";
    t.interval = interval;
    t.y = [angle](double x) { return angle->value(x); };
    t.yp = [rate](double x) { return rate->value(x); };
    t.ypp = [angle, w2](double x) { return -w2 * std::sin(angle->value(x)); };
    return t;
}

SeparatrixState separatrix_state(const PendulumParams& p, double t) {
    p.validate_theta0();
    if (!std::isfinite(t)) throw DomainError("time must be finite");
    const double w = p.omega();
    const double c0 = std::tan(kPi / 4.0 - p.theta0 / 4.0);
    const double A = c0 * std::exp(-w * t);
    const double d = 1.0 + A * A;
    SeparatrixState s;
    s.theta = kPi - 4.0 * std::atan(A);
    s.theta_dot = 4.0 * w * A / d;
    s.theta_ddot = -4.0 * w * w * A * (1.0 - A * A) / (d * d);
    return s;
}

double separatrix_theta(const PendulumParams& p, double t) {
    return separatrix_state(p, t).theta;
}

double separatrix_time(const PendulumParams& p, double theta) {
    p.validate_theta0();
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
    const double slack = 1e-12 * std::max(1.0, std::fabs(p.theta0));
    if (theta < p.theta0 - slack)
        throw DomainError("theta = " + std::to_string(theta) +
                          " is below theta0 = " + std::to_string(p.theta0) +
                          "; the solution is increasing from theta0");
    if (!(theta < kPi))
        throw DomainError("theta = " + std::to_string(theta) +
                          " is not below pi; the solution only approaches pi");
    const double th = std::max(theta, p.theta0);
    const double c0 = std::tan(kPi / 4.0 - p.theta0 / 4.0);
    const double c = std::tan(kPi / 4.0 - th / 4.0);
    return std::log(c0 / c) / p.omega();
}

double separatrix_initial_rate(const PendulumParams& p) {
    return separatrix_state(p, 0.0).theta_dot;
}

Trajectory separatrix_trajectory(const PendulumParams& p, const Interval& interval) {
    p.validate_theta0();
    interval.validate();
    Trajectory t;
    t.kind = "separatrix";
    t.interval = interval;
    t.y = [p](double x) { return separatrix_state(p, x).theta; };
    t.yp = [p](double x) { return separatrix_state(p, x).theta_dot; };
    t.ypp = [p](double x) { return separatrix_state(p, x).theta_ddot; };
    return t;
}

double pendulum_energy(const PendulumParams& p, double theta, double theta_dot) {
    p.validate();
    return 0.5 * p.m * p.ell * p.ell * theta_dot * theta_dot -
           p.m * p.g * p.ell * std::cos(theta);
}

double inequality38_margin(const PendulumParams& p, const Trajectory& theta_traj,
                           const TestFunction& tf, const QuadratureSpec& spec) {
    p.validate();
    const QuadResult rate_part = integrate(
        [&](double x) {
            const double dphi = tf.phi_prime(x);
            return dphi * dphi;
        },
        theta_traj.interval, spec);
    const QuadResult angle_part = integrate(
        [&](double x) {
            const double phi = tf.phi(x);
            return std::cos(theta_traj.y(x)) * phi * phi;
        },
        theta_traj.interval, spec);
    return p.ell * rate_part.value - p.g * angle_part.value;
}

} // namespace varineq
