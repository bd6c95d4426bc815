#include "varineq/hermite_grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace varineq {

std::vector<double> fd_derivative4(const std::vector<double>& v, double dx) {
    const std::size_t n = v.size();
    if (n < 5) throw ConfigError("derivative stencil needs at least 5 samples, got " +
                                 std::to_string(n));
    if (!(dx > 0.0)) throw ConfigError("grid spacing must be positive");
    std::vector<double> d(n);
    const double s = 1.0 / (12.0 * dx);
    d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) * s;
    d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) * s;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) * s;
    d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] +
                6.0 * v[n - 4] - v[n - 5]) * s;
    d[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] -
                16.0 * v[n - 4] + 3.0 * v[n - 5]) * s;
    return d;
}

HermiteGrid::HermiteGrid(std::vector<double> x, std::vector<double> v, std::vector<double> vp)
    : x_(std::move(x)), v_(std::move(v)), vp_(std::move(vp)) {
    const std::size_t n = x_.size();
    if (n < 5)
        throw ConfigError("sampled curve needs at least 5 rows, got " + std::to_string(n));
    if (v_.size() != n || vp_.size() != n)
        throw ConfigError("sampled curve columns have mismatched lengths");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x_[i]) || !std::isfinite(v_[i]) || !std::isfinite(vp_[i])) {
            std::ostringstream os;
            os << "sampled curve row " << i << " contains a non-finite entry";
            throw ConfigError(os.str());
        }
    }

    const double span = x_.back() - x_.front();
    if (!(span > 0.0)) throw ConfigError("sampled grid must be strictly ascending");
    dx_ = span / static_cast<double>(n - 1);
    const double slack = 1e-8 * std::max(1.0, std::fabs(span));
    for (std::size_t i = 0; i < n; ++i) {
        const double expected = x_.front() + static_cast<double>(i) * dx_;
        if (std::fabs(x_[i] - expected) > slack) {
            std::ostringstream os;
            os << "sampled grid is not uniform: node " << i << " is " << x_[i]
               << ", expected " << expected;
            throw ConfigError(os.str());
        }
    }

    interval_ = Interval(x_.front(), x_.back());
    vpp_ = fd_derivative4(vp_, dx_);
    vppp_ = fd_derivative4(vpp_, dx_);
}

std::size_t HermiteGrid::locate(double x) const {
    if (!interval_.contains(x)) {
        std::ostringstream os;
        os << "x=" << x << " lies outside the sampled range [" << interval_.alpha
           << ", " << interval_.beta << "]";
        throw DomainError(os.str());
    }
    const auto n = static_cast<std::ptrdiff_t>(x_.size());
    auto idx = static_cast<std::ptrdiff_t>(std::floor((x - x_.front()) / dx_));
    idx = std::clamp<std::ptrdiff_t>(idx, 0, n - 2);
    return static_cast<std::size_t>(idx);
}

double HermiteGrid::hermite(double t, double dx, double v0, double v1, double d0, double d1) {
    const double u = 1.0 - t;
    return (1.0 + 2.0 * t) * u * u * v0 + t * u * u * dx * d0 +
           t * t * (3.0 - 2.0 * t) * v1 + t * t * (t - 1.0) * dx * d1;
}

double HermiteGrid::value(double x) const {
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / dx_;
    return hermite(t, dx_, v_[i], v_[i + 1], vp_[i], vp_[i + 1]);
}

double HermiteGrid::deriv(double x) const {
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / dx_;
    return hermite(t, dx_, vp_[i], vp_[i + 1], vpp_[i], vpp_[i + 1]);
}

double HermiteGrid::deriv2(double x) const {
    const std::size_t i = locate(x);
    const double t = (x - x_[i]) / dx_;
    return hermite(t, dx_, vpp_[i], vpp_[i + 1], vppp_[i], vppp_[i + 1]);
}

} // namespace varineq
