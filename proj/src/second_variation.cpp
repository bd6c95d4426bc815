#include "varineq/second_variation.hpp"

#include <cmath>
#include <exception>
#include <limits>

namespace varineq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double node_residual(const LagrangianModel& model, const Trajectory& traj, double x) {
    const PartialSet ps = eval_partials(model, traj.point(x));
    const double total_dx_fyp = ps.f_xyp + ps.f_yyp * traj.yp(x) + ps.f_ypyp * traj.ypp(x);
    return ps.f_y - total_dx_fyp;
}

ElResidualResult finish_residual(ElResidualResult r) {
    double m = 0.0;
    for (double v : r.residual) m = std::max(m, std::fabs(v));
    r.max_abs = m;
    return r;
}

std::vector<double> residual_grid(const Trajectory& traj, int grid_size) {
    if (grid_size < 2)
        throw ConfigError("residual grid needs at least 2 nodes, got " +
                          std::to_string(grid_size));
    std::vector<double> x(static_cast<std::size_t>(grid_size));
    const double len = traj.interval.length();
    for (int i = 0; i < grid_size; ++i)
        x[static_cast<std::size_t>(i)] =
            traj.interval.alpha + len * static_cast<double>(i) / (grid_size - 1);
    x.back() = traj.interval.beta;
    return x;
}

} // namespace

QuadResult functional_value(const LagrangianModel& model, const Trajectory& traj,
                            const QuadratureSpec& spec) {
    return integrate([&](double x) { return model.value(traj.point(x)); },
                     traj.interval, spec);
}

ElResidualResult el_residual_serial(const LagrangianModel& model, const Trajectory& traj,
                                    int grid_size) {
    ElResidualResult r;
    r.x = residual_grid(traj, grid_size);
    r.residual.resize(r.x.size());
    for (std::size_t i = 0; i < r.x.size(); ++i)
        r.residual[i] = node_residual(model, traj, r.x[i]);
    return finish_residual(std::move(r));
}

ElResidualResult el_residual(const LagrangianModel& model, const Trajectory& traj,
                             int grid_size) {
    ElResidualResult r;
    r.x = residual_grid(traj, grid_size);
    r.residual.resize(r.x.size());
    const auto n = static_cast<std::ptrdiff_t>(r.x.size());
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            r.residual[static_cast<std::size_t>(i)] =
                node_residual(model, traj, r.x[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
            r.residual[static_cast<std::size_t>(i)] = kNaN;
        }
    }
    if (err) std::rethrow_exception(err);
    return finish_residual(std::move(r));
}

QuadResult second_variation_direct(const LagrangianModel& model, const Trajectory& traj,
                                   const TestFunction& tf, double t,
                                   const QuadratureSpec& spec) {
    if (!std::isfinite(t)) throw ConfigError("shift parameter t must be finite");
    auto g = [&, t](double x) {
        const PhiEval e = tf.eval(x);
        const Point3 p{x, traj.y(x) + t * e.phi, traj.yp(x) + t * e.phi_prime};
        const PartialSet ps = eval_partials(model, p);
        return ps.f_yy * e.phi * e.phi + 2.0 * ps.f_yyp * e.phi * e.phi_prime +
               ps.f_ypyp * e.phi_prime * e.phi_prime;
    };
    return integrate(g, traj.interval, spec);
}

PaperFormResult second_variation_paper(const LagrangianModel& model, const Trajectory& traj,
                                       const TestFunction& tf, const QuadratureSpec& spec) {
    auto term = [&](auto weight) {
        return integrate(
            [&, weight](double x) {
                const PhiEval e = tf.eval(x);
                return weight(eval_partials(model, traj.point(x)), e);
            },
            traj.interval, spec);
    };

    const QuadResult q1 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_yy * e.phi * e.phi;
    });
    const QuadResult q2 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_yyyp * 2.0 * e.phi * e.phi * e.phi;
    });
    const QuadResult q3 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_yyp * 2.0 * e.phi * e.phi_prime;
    });
    const QuadResult q4 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_yypyp * 2.0 * e.phi * e.phi * e.phi_prime;
    });
    const QuadResult q5 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_ypyp * e.phi * e.phi_second;
    });
    const QuadResult q6 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_yypyp * e.phi_prime * e.phi * e.phi;
    });
    const QuadResult q7 = term([](const PartialSet& ps, const PhiEval& e) {
        return ps.f_ypypyp * e.phi * e.phi_prime * e.phi_prime;
    });

    PaperFormResult r;
    r.terms = SecondVariationTerms{q1.value, q2.value, q3.value, q4.value,
                                   q5.value, q6.value, q7.value};
    r.value = r.terms.value();
    r.error_estimate = std::fabs(q1.error_estimate) + std::fabs(q2.error_estimate) +
                       std::fabs(q3.error_estimate) + std::fabs(q4.error_estimate) +
                       std::fabs(q5.error_estimate) + std::fabs(q6.error_estimate) +
                       std::fabs(q7.error_estimate);
    r.converged = q1.converged && q2.converged && q3.converged && q4.converged &&
                  q5.converged && q6.converged && q7.converged;
    return r;
}

QuadResult second_variation_ibp_standard(const LagrangianModel& model, const Trajectory& traj,
                                         const TestFunction& tf, const QuadratureSpec& spec) {
    if (model.analytic() && !model.mixed_x_supported)
        throw CapabilityError(
            "model '" + model.name +
            "' does not supply the mixed x third partials the standard "
            "integrated-by-parts form needs");
    auto g = [&](double x) {
        const PhiEval e = tf.eval(x);
        const PartialSet ps = eval_partials(model, traj.point(x));
        const double yp = traj.yp(x);
        const double ypp = traj.ypp(x);
        const double ddx_fyyp = ps.f_xyyp + ps.f_yyyp * yp + ps.f_yypyp * ypp;
        const double ddx_fypyp = ps.f_xypyp + ps.f_yypyp * yp + ps.f_ypypyp * ypp;
        const double bracket_dx = 2.0 * ddx_fyyp * e.phi + 2.0 * ps.f_yyp * e.phi_prime +
                                  ddx_fypyp * e.phi_prime + ps.f_ypyp * e.phi_second;
        return ps.f_yy * e.phi * e.phi - bracket_dx * e.phi;
    };
    return integrate(g, traj.interval, spec);
}

double inequality_margin(const LagrangianModel& model, const Trajectory& traj,
                         const TestFunction& tf, const QuadratureSpec& spec) {
    return second_variation_paper(model, traj, tf, spec).value;
}

namespace {

bool phi_vanishes_everywhere(const TestFunction& tf, const Interval& interval) {
    const int probes = 101;
    double biggest = 0.0;
    for (int i = 0; i < probes; ++i) {
        const double x = interval.alpha +
                         interval.length() * static_cast<double>(i) / (probes - 1);
        const PhiEval e = tf.eval(x);
        biggest = std::max({biggest, std::fabs(e.phi), std::fabs(e.phi_prime)});
    }
    return biggest == 0.0;
}

double anchored_gap(double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

} // namespace

CheckReport run_check(const LagrangianModel& model, const Trajectory& traj,
                      const TestFunction& tf, const CheckOptions& opts) {
    opts.quad.validate();
    CheckReport rep;
    rep.converged = true;

    auto stage = [&rep](const char* name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            rep.errors.push_back(std::string(name) + ": " + e.what());
            rep.converged = false;
        }
    };

    stage("boundary", [&] {
        rep.boundary = tf.boundary_check(opts.tol.boundary);
        rep.boundary_ok = rep.boundary.ok;
    });
    stage("degeneracy probe", [&] {
        rep.degenerate = phi_vanishes_everywhere(tf, traj.interval);
    });

    rep.F_value = kNaN;
    stage("functional value", [&] {
        const QuadResult q = functional_value(model, traj, opts.quad);
        rep.F_value = q.value;
        rep.err_F = q.error_estimate;
        rep.converged = rep.converged && q.converged;
    });

    rep.el_residual_max = kNaN;
    rep.el_checked = opts.check_el;
    stage("euler-lagrange residual", [&] {
        rep.el_residual_max = el_residual(model, traj, opts.el_grid).max_abs;
        rep.el_ok = rep.el_residual_max <= opts.tol.el_solution;
    });

    rep.I2_direct = rep.I2_paper = rep.I2_ibp_standard = kNaN;
    rep.residual_AB = rep.residual_AC = rep.inequality_margin = kNaN;
    if (rep.degenerate) {
        // Identically zero phi: every form is exactly zero; skip the
        // quadratures so 0-vs-0 roundoff cannot fake a residual.
        rep.I2_direct = rep.I2_paper = rep.I2_ibp_standard = 0.0;
        rep.residual_AB = rep.residual_AC = 0.0;
        rep.inequality_margin = 0.0;
        rep.identity_ok = true;
        return rep;
    }

    stage("direct form", [&] {
        const QuadResult q = second_variation_direct(model, traj, tf, opts.shift_t, opts.quad);
        rep.I2_direct = q.value;
        rep.err_direct = q.error_estimate;
        rep.converged = rep.converged && q.converged;
    });
    stage("integrated-by-parts form", [&] {
        const PaperFormResult pf = second_variation_paper(model, traj, tf, opts.quad);
        rep.I2_paper = pf.value;
        rep.terms = pf.terms;
        rep.err_paper = pf.error_estimate;
        rep.converged = rep.converged && pf.converged;
        rep.inequality_margin = pf.value;
    });
    stage("standard integrated-by-parts form", [&] {
        const QuadResult q = second_variation_ibp_standard(model, traj, tf, opts.quad);
        rep.I2_ibp_standard = q.value;
        rep.err_ibp = q.error_estimate;
        rep.converged = rep.converged && q.converged;
    });

    if (std::isfinite(rep.I2_direct) && std::isfinite(rep.I2_paper))
        rep.residual_AB = anchored_gap(rep.I2_direct, rep.I2_paper);
    if (std::isfinite(rep.I2_direct) && std::isfinite(rep.I2_ibp_standard)) {
        rep.residual_AC = anchored_gap(rep.I2_direct, rep.I2_ibp_standard);
        rep.identity_ok = rep.residual_AC <= opts.tol.identity;
    }
    return rep;
}

} // namespace varineq
