#include "varineq/trajectory.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace varineq {

Trajectory equilibrium_trajectory(const Interval& interval, double y0) {
    interval.validate();
    if (!std::isfinite(y0)) throw ConfigError("equilibrium level y0 must be finite");
    Trajectory t;
    t.kind = "equilibrium";
    t.interval = interval;
    t.y = [y0](double) { return y0; };
    t.yp = [](double) { return 0.0; };
    t.ypp = [](double) { return 0.0; };
    return t;
}

Trajectory linear_trajectory(const Interval& interval, double y0, double slope) {
    interval.validate();
    if (!std::isfinite(y0) || !std::isfinite(slope))
        throw ConfigError("linear trajectory parameters must be finite");
    const double alpha = interval.alpha;
    Trajectory t;
    t.kind = "linear";
    t.interval = interval;
    t.y = [y0, slope, alpha](double x) { return y0 + slope * (x - alpha); };
    t.yp = [slope](double) { return slope; };
    t.ypp = [](double) { return 0.0; };
    return t;
}

Trajectory sampled_trajectory(HermiteGrid grid) {
    auto g = std::make_shared<HermiteGrid>(std::move(grid));
    Trajectory t;
    t.kind = "sampled";
    t.interval = g->interval();
    t.y = [g](double x) { return g->value(x); };
    t.yp = [g](double x) { return g->deriv(x); };
    t.ypp = [g](double x) { return g->deriv2(x); };
    return t;
}

Trajectory sampled_trajectory_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trajectory file '" + path + "'");
    std::vector<double> xs, ys, yps;
    std::string line;
    int lineno = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string s = line;
        for (char& c : s)
            if (c == ',') c = ' ';
        std::istringstream is(s);
        double x, y, yp;
        if (!(is >> x >> y >> yp)) {
            if (!saw_data && xs.empty()) continue; // header row
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 3 numeric columns (x,y,yp)");
        }
        saw_data = true;
        xs.push_back(x);
        ys.push_back(y);
        yps.push_back(yp);
    }
    if (xs.size() < 5)
        throw ConfigError(path + ": need at least 5 data rows, found " +
                          std::to_string(xs.size()));
    return sampled_trajectory(HermiteGrid(std::move(xs), std::move(ys), std::move(yps)));
}

ConsistencyReport consistency_check(const Trajectory& traj, int samples) {
    if (samples < 3) throw ConfigError("consistency check needs at least 3 samples");
    const double len = traj.interval.length();
    const double h = 1e-5 * std::max(1.0, len);
    ConsistencyReport r;
    for (int i = 1; i + 1 < samples; ++i) {
        const double x = traj.interval.alpha +
                         len * static_cast<double>(i) / static_cast<double>(samples - 1);
        if (x - h < traj.interval.alpha || x + h > traj.interval.beta) continue;
        const double dy = (traj.y(x + h) - traj.y(x - h)) / (2.0 * h);
        const double dyp = (traj.yp(x + h) - traj.yp(x - h)) / (2.0 * h);
        r.max_yp_mismatch = std::max(r.max_yp_mismatch, std::fabs(dy - traj.yp(x)));
        r.max_ypp_mismatch = std::max(r.max_ypp_mismatch, std::fabs(dyp - traj.ypp(x)));
    }
    return r;
}

} // namespace varineq
