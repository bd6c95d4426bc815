#include "varineq/lagrangian.hpp"

#include <cmath>
#include <sstream>

namespace varineq {

namespace {

std::string point_str(const Point3& p) {
    std::ostringstream os;
    os << "(x=" << p.x << ", y=" << p.y << ", yp=" << p.yp << ")";
    return os.str();
}

double param(const ParamMap& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    if (!std::isfinite(it->second))
        throw ConfigError("parameter '" + key + "' must be finite");
    return it->second;
}

void require_positive(double v, const std::string& key) {
    if (!(v > 0.0))
        throw ConfigError("parameter '" + key + "' must be positive, got " +
                          std::to_string(v));
}

} // namespace

void Point3::validate() const {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(yp))
        throw EvaluationError("evaluation point is non-finite " + point_str(*this));
}

void FdSteps::validate() const {
    if (!(first > 0.0) || !(second > 0.0) || !(third > 0.0) ||
        !std::isfinite(first) || !std::isfinite(second) || !std::isfinite(third))
        throw ConfigError("finite-difference steps must be positive and finite");
}

PartialSet fd_partials(const ValueFn& value_fn, const Point3& p, const FdSteps& steps) {
    steps.validate();
    const auto F = [&](double x, double y, double yp) {
        return value_fn(Point3{x, y, yp});
    };
    const double x = p.x, y = p.y, yp = p.yp;

    // Per-order steps, each scaled by the coordinate it displaces.
    const double h1 = steps.first * std::max(1.0, std::fabs(y));
    const double k1 = steps.first * std::max(1.0, std::fabs(yp));
    const double h2 = steps.second * std::max(1.0, std::fabs(y));
    const double k2 = steps.second * std::max(1.0, std::fabs(yp));
    const double a2 = steps.second * std::max(1.0, std::fabs(x));
    const double h3 = steps.third * std::max(1.0, std::fabs(y));
    const double k3 = steps.third * std::max(1.0, std::fabs(yp));
    const double a3 = steps.third * std::max(1.0, std::fabs(x));

    PartialSet ps;
    ps.f = F(x, y, yp);

    ps.f_y = (F(x, y + h1, yp) - F(x, y - h1, yp)) / (2.0 * h1);
    ps.f_yp = (F(x, y, yp + k1) - F(x, y, yp - k1)) / (2.0 * k1);

    ps.f_yy = (F(x, y + h2, yp) - 2.0 * F(x, y, yp) + F(x, y - h2, yp)) / (h2 * h2);
    ps.f_ypyp = (F(x, y, yp + k2) - 2.0 * F(x, y, yp) + F(x, y, yp - k2)) / (k2 * k2);
    ps.f_yyp = (F(x, y + h2, yp + k2) - F(x, y + h2, yp - k2) -
                F(x, y - h2, yp + k2) + F(x, y - h2, yp - k2)) /
               (4.0 * h2 * k2);
    ps.f_xyp = (F(x + a2, y, yp + k2) - F(x + a2, y, yp - k2) -
                F(x - a2, y, yp + k2) + F(x - a2, y, yp - k2)) /
               (4.0 * a2 * k2);

    // Third order: second difference in one slot, first in the other.
    ps.f_yyyp = ((F(x, y + h3, yp + k3) - 2.0 * F(x, y, yp + k3) + F(x, y - h3, yp + k3)) -
                 (F(x, y + h3, yp - k3) - 2.0 * F(x, y, yp - k3) + F(x, y - h3, yp - k3))) /
                (2.0 * k3 * h3 * h3);
    ps.f_yypyp = ((F(x, y + h3, yp + k3) - 2.0 * F(x, y + h3, yp) + F(x, y + h3, yp - k3)) -
                  (F(x, y - h3, yp + k3) - 2.0 * F(x, y - h3, yp) + F(x, y - h3, yp - k3))) /
                 (2.0 * h3 * k3 * k3);
    ps.f_ypypyp = (F(x, y, yp + 2.0 * k3) - 2.0 * F(x, y, yp + k3) +
                   2.0 * F(x, y, yp - k3) - F(x, y, yp - 2.0 * k3)) /
                  (2.0 * k3 * k3 * k3);
    ps.f_xyyp = 0.0;
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
            for (int s3 : {+1, -1})
                ps.f_xyyp += s1 * s2 * s3 *
                             F(x + s1 * a3, y + s2 * h3, yp + s3 * k3);
    ps.f_xyyp /= 8.0 * a3 * h3 * k3;
    ps.f_xypyp = ((F(x + a3, y, yp + k3) - 2.0 * F(x + a3, y, yp) + F(x + a3, y, yp - k3)) -
                  (F(x - a3, y, yp + k3) - 2.0 * F(x - a3, y, yp) + F(x - a3, y, yp - k3))) /
                 (2.0 * a3 * k3 * k3);
    return ps;
}

PartialSet eval_partials(const LagrangianModel& model, const Point3& p) {
    p.validate();
    PartialSet ps;
    if (model.partials) {
        ps = model.partials(p);
        ps.f = model.value(p);
    } else if (model.fd_steps) {
        ps = fd_partials(model.value, p, *model.fd_steps);
    } else {
        throw CapabilityError("model '" + model.name +
                              "' provides neither analytic partials nor finite-difference steps");
    }

    const struct { const char* name; double v; } fields[] = {
        {"f", ps.f},
        {"f_y", ps.f_y},       {"f_yp", ps.f_yp},
        {"f_yy", ps.f_yy},     {"f_yyp", ps.f_yyp},     {"f_ypyp", ps.f_ypyp},
        {"f_yyyp", ps.f_yyyp}, {"f_yypyp", ps.f_yypyp}, {"f_ypypyp", ps.f_ypypyp},
        {"f_xyp", ps.f_xyp},   {"f_xyyp", ps.f_xyyp},   {"f_xypyp", ps.f_xypyp},
    };
    for (const auto& fld : fields) {
        if (!std::isfinite(fld.v))
            throw EvaluationError(std::string(fld.name) + " of model '" + model.name +
                                  "' is non-finite at " + point_str(p));
    }
    return ps;
}

LagrangianModel pendulum_model(double m, double ell, double g) {
    require_positive(m, "m");
    require_positive(ell, "ell");
    require_positive(g, "g");
    LagrangianModel model;
    model.name = "pendulum";
    model.value = [m, ell, g](const Point3& p) {
        return 0.5 * m * ell * ell * p.yp * p.yp + m * g * ell * std::cos(p.y);
    };
    model.partials = [m, ell, g](const Point3& p) {
        PartialSet ps;
        ps.f_y = -m * g * ell * std::sin(p.y);
        ps.f_yp = m * ell * ell * p.yp;
        ps.f_yy = -m * g * ell * std::cos(p.y);
        ps.f_ypyp = m * ell * ell;
        return ps; // every mixed and third partial is identically zero
    };
    return model;
}

LagrangianModel harmonic_model(double k) {
    if (!std::isfinite(k)) throw ConfigError("parameter 'k' must be finite");
    LagrangianModel model;
    model.name = "harmonic";
    model.value = [k](const Point3& p) {
        return 0.5 * p.yp * p.yp - 0.5 * k * p.y * p.y;
    };
    model.partials = [k](const Point3& p) {
        PartialSet ps;
        ps.f_y = -k * p.y;
        ps.f_yp = p.yp;
        ps.f_yy = -k;
        ps.f_ypyp = 1.0;
        return ps;
    };
    return model;
}

LagrangianModel arclength_model() {
    LagrangianModel model;
    model.name = "arclength";
    model.value = [](const Point3& p) {
        return std::sqrt(1.0 + p.yp * p.yp);
    };
    model.partials = [](const Point3& p) {
        const double w = 1.0 + p.yp * p.yp;
        const double r = std::sqrt(w);
        PartialSet ps;
        ps.f_yp = p.yp / r;
        ps.f_ypyp = 1.0 / (w * r);
        ps.f_ypypyp = -3.0 * p.yp / (w * w * r);
        return ps;
    };
    return model;
}

LagrangianModel poly_model(double k) {
    // Cubic with every second and third partial the toolkit consumes nonzero,
    // yet y == 0 still an extremal: f_y and f_yp both vanish along y == 0.
    if (!std::isfinite(k)) throw ConfigError("parameter 'k' must be finite");
    LagrangianModel model;
    model.name = "poly";
    model.value = [k](const Point3& p) {
        const double x = p.x, y = p.y, yp = p.yp;
        return k * (y * y * yp + y * yp * yp + x * y * yp + x * yp * yp +
                    y * y * y / 3.0 + yp * yp * yp / 3.0);
    };
    model.partials = [k](const Point3& p) {
        const double x = p.x, y = p.y, yp = p.yp;
        PartialSet ps;
        ps.f_y = k * (2.0 * y * yp + yp * yp + x * yp + y * y);
        ps.f_yp = k * (y * y + 2.0 * y * yp + x * y + 2.0 * x * yp + yp * yp);
        ps.f_yy = k * (2.0 * yp + 2.0 * y);
        ps.f_yyp = k * (2.0 * y + 2.0 * yp + x);
        ps.f_ypyp = k * (2.0 * y + 2.0 * x + 2.0 * yp);
        ps.f_yyyp = 2.0 * k;
        ps.f_yypyp = 2.0 * k;
        ps.f_ypypyp = 2.0 * k;
        ps.f_xyp = k * (y + 2.0 * yp);
        ps.f_xyyp = k;
        ps.f_xypyp = 2.0 * k;
        return ps;
    };
    return model;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"pendulum",
         {{"m", 1.0}, {"ell", 1.0}, {"g", 9.8}},
         {"equilibrium", "separatrix", "rk4", "sampled"},
         [](const ParamMap& ps) {
             return pendulum_model(param(ps, "m", 1.0), param(ps, "ell", 1.0),
                                   param(ps, "g", 9.8));
         }},
        {"harmonic",
         {{"k", 1.0}},
         {"equilibrium", "linear", "sampled"},
         [](const ParamMap& ps) { return harmonic_model(param(ps, "k", 1.0)); }},
        {"arclength",
         {},
         {"equilibrium", "linear", "sampled"},
         [](const ParamMap&) { return arclength_model(); }},
        {"poly",
         {{"k", 1.0}},
         {"equilibrium", "linear", "sampled"},
         [](const ParamMap& ps) { return poly_model(param(ps, "k", 1.0)); }},
    };
    return entries;
}

LagrangianModel make_model(const std::string& name, const ParamMap& params) {
    for (const auto& entry : catalog()) {
        if (entry.name == name) return entry.make(params);
    }
    std::string valid;
    for (const auto& entry : catalog()) {
        if (!valid.empty()) valid += ", ";
        valid += entry.name;
    }
    throw NotFoundError("unknown model '" + name + "'; valid models: " + valid);
}

} // namespace varineq
