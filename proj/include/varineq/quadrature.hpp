#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "varineq/interval.hpp"

namespace varineq {

enum class QuadRule { gauss5, simpson };

QuadRule parse_rule(const std::string& name);
std::string rule_name(QuadRule rule);

/// Composite-rule settings shared by every integral in the toolkit.
struct QuadratureSpec {
    QuadRule rule = QuadRule::gauss5;
    int panels = 8;          // initial panel count, >= 1
    double tol = 1e-12;      // relative refinement tolerance
    int max_panels = 4096;   // refinement cap

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // last successive difference (NaN if no refinement ran)
    bool converged = false;
    int panels_used = 0;
};

using Integrand = std::function<double(double)>;

/**
 * Composite quadrature over [alpha, beta] with panel doubling.
 *
 * The panel count doubles until two successive composite values differ by
 * less than tol * max(1, |value|) or max_panels is reached; the last
 * difference is reported as the error estimate. Panel contributions are
 * evaluated by the parallel kernel and summed in ascending panel order, so
 * the result does not depend on the number of threads.
 *
 * Throws EvaluationError if the integrand returns a non-finite value; the
 * message names the offending abscissa.
 */
QuadResult integrate(const Integrand& g, const Interval& interval,
                     const QuadratureSpec& spec = {});

/// Serial reference for integrate(); kept for testing. Bit-identical to the
/// parallel path by construction.
QuadResult integrate_serial(const Integrand& g, const Interval& interval,
                            const QuadratureSpec& spec = {});

namespace detail {

/// Contribution of panel i out of `panels` equal panels of [a, b].
double panel_value(const Integrand& g, double a, double h, int i, QuadRule rule);

/// out[i] = panel_value(i) for every panel. Serial reference implementation.
void eval_panels_serial(const Integrand& g, const Interval& interval, QuadRule rule,
                        int panels, std::span<double> out);

/// Same contract as eval_panels_serial, OpenMP parallel over panels.
void eval_panels_omp(const Integrand& g, const Interval& interval, QuadRule rule,
                     int panels, std::span<double> out);

/// Ascending-index sum; the one reduction order used everywhere.
double ordered_sum(std::span<const double> values);

} // namespace detail

} // namespace varineq
