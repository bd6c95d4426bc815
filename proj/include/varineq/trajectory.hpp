#pragma once

#include <functional>
#include <string>

#include "varineq/hermite_grid.hpp"
#include "varineq/interval.hpp"
#include "varineq/lagrangian.hpp"

namespace varineq {

/**
 * Candidate trajectory y(x) on an interval, with first and second
 * derivatives. The second derivative feeds the Euler-Lagrange residual and
 * the standard integrated-by-parts form of the second variation.
 *
 * kind records how the trajectory was built ("equilibrium", "linear",
 * "separatrix", "rk4", "sampled"); callers use it to decide which checks
 * are meaningful (an extremal-solution kind should have near-zero residual,
 * an arbitrary sampled curve need not).
 */
struct Trajectory {
    std::string kind;
    Interval interval;
    std::function<double(double)> y;
    std::function<double(double)> yp;
    std::function<double(double)> ypp;

    Point3 point(double x) const { return Point3{x, y(x), yp(x)}; }
};

/// Constant trajectory y == y0.
Trajectory equilibrium_trajectory(const Interval& interval, double y0 = 0.0);

/// Straight line y = y0 + slope * (x - alpha).
Trajectory linear_trajectory(const Interval& interval, double y0, double slope);

/// Trajectory from sampled data (columns y and y'); y'' is difference-derived.
Trajectory sampled_trajectory(HermiteGrid grid);

/// Sampled trajectory from a CSV file with columns x,y,yp.
Trajectory sampled_trajectory_from_csv(const std::string& path);

/// How well yp matches the difference quotient of y, and ypp of yp, over an
/// interior probe grid. Large mismatches mean the columns of a sampled
/// trajectory disagree with each other.
struct ConsistencyReport {
    double max_yp_mismatch = 0.0;
    double max_ypp_mismatch = 0.0;
};

ConsistencyReport consistency_check(const Trajectory& traj, int samples = 201);

} // namespace varineq
