#pragma once

#include <cmath>

#include "varineq/errors.hpp"

namespace varineq {

/// Closed bounded interval [alpha, beta] with alpha < beta.
struct Interval {
    double alpha = 0.0;
    double beta = 1.0;

    Interval() = default;
    Interval(double a, double b) : alpha(a), beta(b) { validate(); }

    double length() const { return beta - alpha; }

    void validate() const {
        if (!std::isfinite(alpha) || !std::isfinite(beta))
            throw ConfigError("interval endpoints must be finite");
        if (!(alpha < beta))
            throw ConfigError("interval requires alpha < beta");
    }

    /// True if x lies in [alpha, beta] up to a few ulps of slack, so panel
    /// endpoints produced by rounded arithmetic are never rejected.
    bool contains(double x) const {
        const double slack = 16.0 * 2.220446049250313e-16 *
                             std::max({std::fabs(alpha), std::fabs(beta), length()});
        return x >= alpha - slack && x <= beta + slack;
    }
};

} // namespace varineq
