#include "varineq/quadrature.hpp"

#include <cmath>
#include <exception>
#include <limits>

#include "varineq/errors.hpp"

namespace varineq {

QuadRule parse_rule(const std::string& name) {
    if (name == "gauss5") return QuadRule::gauss5;
    if (name == "simpson") return QuadRule::simpson;
    throw ConfigError("unknown quadrature rule '" + name + "' (expected gauss5 or simpson)");
}

std::string rule_name(QuadRule rule) {
    return rule == QuadRule::gauss5 ? "gauss5" : "simpson";
}

void QuadratureSpec::validate() const {
    if (panels < 1) throw ConfigError("quadrature panels must be >= 1");
    if (!(tol > 0.0)) throw ConfigError("quadrature tol must be > 0");
    if (max_panels < panels) throw ConfigError("quadrature max_panels must be >= panels");
}

namespace detail {

// 5-point Gauss-Legendre nodes/weights on [-1, 1], from the closed forms.
struct Gauss5 {
    double x[5];
    double w[5];
    Gauss5() {
        const double a = std::sqrt(10.0 / 7.0);
        const double x1 = std::sqrt(5.0 - 2.0 * a) / 3.0;
        const double x2 = std::sqrt(5.0 + 2.0 * a) / 3.0;
        const double w0 = 128.0 / 225.0;
        const double w1 = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
        const double w2 = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
        x[0] = -x2; x[1] = -x1; x[2] = 0.0; x[3] = x1; x[4] = x2;
        w[0] = w2;  w[1] = w1;  w[2] = w0;  w[3] = w1; w[4] = w2;
    }
};

static const Gauss5 kGauss5;

double panel_value(const Integrand& g, double a, double h, int i, QuadRule rule) {
    const double left = a + i * h;
    if (rule == QuadRule::gauss5) {
        const double mid = left + 0.5 * h;
        const double half = 0.5 * h;
        double acc = 0.0;
        for (int k = 0; k < 5; ++k)
            acc += kGauss5.w[k] * g(mid + half * kGauss5.x[k]);
        return half * acc;
    }
    // Simpson: one parabola per panel.
    const double mid = left + 0.5 * h;
    const double right = left + h;
    return (h / 6.0) * (g(left) + 4.0 * g(mid) + g(right));
}

void eval_panels_serial(const Integrand& g, const Interval& interval, QuadRule rule,
                        int panels, std::span<double> out) {
    const double h = interval.length() / panels;
    for (int i = 0; i < panels; ++i)
        out[i] = panel_value(g, interval.alpha, h, i, rule);
}

void eval_panels_omp(const Integrand& g, const Interval& interval, QuadRule rule,
                     int panels, std::span<double> out) {
    const double h = interval.length() / panels;
    // Exceptions may not unwind out of the parallel region; stash the first
    // one and rethrow on the calling thread.
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < panels; ++i) {
        try {
            out[i] = panel_value(g, interval.alpha, h, i, rule);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
            out[i] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    if (err) std::rethrow_exception(err);
}

double ordered_sum(std::span<const double> values) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
}

namespace {

// A non-finite composite value means some sample was non-finite (inf/nan
// propagate through weighted sums) or a panel sum overflowed. Rescan
// serially to name the offending abscissa.
[[noreturn]] void report_nonfinite(const Integrand& g, const Interval& interval,
                                   QuadRule rule, int panels) {
    const double h = interval.length() / panels;
    for (int i = 0; i < panels; ++i) {
        const double left = interval.alpha + i * h;
        if (rule == QuadRule::gauss5) {
            const double mid = left + 0.5 * h;
            for (int k = 0; k < 5; ++k) {
                const double x = mid + 0.5 * h * kGauss5.x[k];
                if (!std::isfinite(g(x)))
                    throw EvaluationError("integrand is non-finite at x = " + std::to_string(x));
            }
        } else {
            for (double x : {left, left + 0.5 * h, left + h})
                if (!std::isfinite(g(x)))
                    throw EvaluationError("integrand is non-finite at x = " + std::to_string(x));
        }
    }
    throw EvaluationError("non-finite panel sum (finite samples overflowed)");
}

using PanelKernel = void (*)(const Integrand&, const Interval&, QuadRule, int,
                             std::span<double>);

QuadResult refine(const Integrand& g, const Interval& interval,
                  const QuadratureSpec& spec, PanelKernel kernel) {
    spec.validate();
    interval.validate();

    std::vector<double> buf;
    auto composite = [&](int panels) {
        buf.resize(static_cast<size_t>(panels));
        kernel(g, interval, spec.rule, panels, buf);
        double v = ordered_sum(buf);
        if (!std::isfinite(v)) report_nonfinite(g, interval, spec.rule, panels);
        return v;
    };

    QuadResult res;
    int p = spec.panels;
    double value = composite(p);
    res.error_estimate = std::numeric_limits<double>::quiet_NaN();

    while (p < spec.max_panels) {
        const int p2 = 2 * p > spec.max_panels ? spec.max_panels : 2 * p;
        const double next = composite(p2);
        res.error_estimate = std::fabs(next - value);
        value = next;
        p = p2;
        if (res.error_estimate <= spec.tol * std::max(1.0, std::fabs(value))) {
            res.converged = true;
            break;
        }
    }

    res.value = value;
    res.panels_used = p;
    return res;
}

} // namespace
} // namespace detail

QuadResult integrate(const Integrand& g, const Interval& interval,
                     const QuadratureSpec& spec) {
    return detail::refine(g, interval, spec, &detail::eval_panels_omp);
}

QuadResult integrate_serial(const Integrand& g, const Interval& interval,
                            const QuadratureSpec& spec) {
    return detail::refine(g, interval, spec, &detail::eval_panels_serial);
}

} // namespace varineq
