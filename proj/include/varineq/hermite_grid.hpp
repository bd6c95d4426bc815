#pragma once

#include <vector>

#include "varineq/errors.hpp"
#include "varineq/interval.hpp"

namespace varineq {

/**
 * A curve sampled on a uniform grid with values and first derivatives per
 * node. Gives smooth access to v, v' and v'' anywhere on the interval.
 *
 * Off-node evaluation is cubic Hermite on each segment, using the stored
 * slope column for v and higher difference-derived columns for v' and v'':
 * the v'' column comes from fourth-order central differences of the supplied
 * v' data (one-sided at the edges), and v''' likewise from v''. On a grid
 * fine enough for the data (a few thousand nodes for smooth curves) this
 * keeps off-node values of v within ~1e-10 of the underlying function.
 */
class HermiteGrid {
public:
    /// x must be uniform ascending with at least 5 nodes; all columns finite
    /// and equally sized. Violations raise ConfigError.
    HermiteGrid(std::vector<double> x, std::vector<double> v, std::vector<double> vp);

    double value(double x) const;   // v(x)
    double deriv(double x) const;   // v'(x)
    double deriv2(double x) const;  // v''(x)

    const Interval& interval() const { return interval_; }
    std::size_t size() const { return x_.size(); }
    double dx() const { return dx_; }

    // Node columns, mostly for inspection in tests.
    const std::vector<double>& nodes() const { return x_; }
    const std::vector<double>& values() const { return v_; }
    const std::vector<double>& derivs() const { return vp_; }
    const std::vector<double>& derivs2() const { return vpp_; }

private:
    std::size_t locate(double x) const;
    static double hermite(double t, double dx, double v0, double v1, double d0, double d1);

    std::vector<double> x_, v_, vp_;
    std::vector<double> vpp_, vppp_;
    Interval interval_;
    double dx_ = 0.0;
};

/// Fourth-order finite-difference derivative of uniformly sampled data
/// (central in the interior, one-sided at the two nodes on each edge).
/// Needs at least 5 samples.
std::vector<double> fd_derivative4(const std::vector<double>& v, double dx);

} // namespace varineq
