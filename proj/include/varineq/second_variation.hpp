#pragma once

#include <string>
#include <vector>

#include "varineq/lagrangian.hpp"
#include "varineq/quadrature.hpp"
#include "varineq/test_function.hpp"
#include "varineq/trajectory.hpp"

namespace varineq {

/**
 * Per-term integrals of the integrated-by-parts second variation, all with
 * partials evaluated along the unshifted trajectory (x, y(x), y'(x)):
 *
 *   t1 = int f_yy phi^2          t5 = int f_ypyp phi phi''
 *   t2 = int f_yyyp 2 phi^3      t6 = int f_yypyp phi' phi^2
 *   t3 = int f_yyp 2 phi phi'    t7 = int f_ypypyp phi phi'^2
 *   t4 = int f_yypyp 2 phi^2 phi'
 *
 * The combined value is (t1 - t2) - (t3 + t4 + t5 + t6 + t7); t1 - t2 and
 * the rest are the two sides of the variational inequality this toolkit
 * measures, so the combined value doubles as the inequality margin.
 */
struct SecondVariationTerms {
    double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0, t5 = 0.0, t6 = 0.0, t7 = 0.0;

    double value() const { return (t1 - t2) - (t3 + t4 + t5 + t6 + t7); }
    double left_side() const { return t1 - t2; }
    double right_side() const { return t3 + t4 + t5 + t6 + t7; }
};

/// Euler-Lagrange residual on a uniform grid, including both endpoints.
struct ElResidualResult {
    double max_abs = 0.0;
    std::vector<double> x;
    std::vector<double> residual;
};

/// F(y): the functional value along the trajectory.
QuadResult functional_value(const LagrangianModel& model, const Trajectory& traj,
                            const QuadratureSpec& spec = {});

/// Residual f_y - d/dx f_yp with the total derivative expanded along the
/// trajectory as f_xyp + f_yyp y' + f_ypyp y''. Zero along an extremal.
/// grid_size >= 2. Parallel over nodes; max taken in node order.
ElResidualResult el_residual(const LagrangianModel& model, const Trajectory& traj,
                             int grid_size = 201);

/// Serial reference for el_residual; bit-identical by construction.
ElResidualResult el_residual_serial(const LagrangianModel& model, const Trajectory& traj,
                                    int grid_size = 201);

/**
 * Form A: the direct second variation at shift parameter t,
 *   int( f_yy phi^2 + 2 f_yyp phi phi' + f_ypyp phi'^2 ) dx
 * with every partial evaluated along (x, y + t phi, y' + t phi'). t = 0 is
 * the second variation at the trajectory itself.
 */
QuadResult second_variation_direct(const LagrangianModel& model, const Trajectory& traj,
                                   const TestFunction& tf, double t = 0.0,
                                   const QuadratureSpec& spec = {});

/// Form B result: the term breakdown plus aggregate quadrature health.
struct PaperFormResult {
    SecondVariationTerms terms;
    double value = 0.0;
    double error_estimate = 0.0;  // sum of per-term estimates
    bool converged = false;       // all seven term integrals converged
};

/// Form B: the integrated-by-parts expression with the derivative of the
/// bracket expanded with (0, phi, phi') in the chain-rule slots. See
/// SecondVariationTerms for the pieces.
PaperFormResult second_variation_paper(const LagrangianModel& model, const Trajectory& traj,
                                       const TestFunction& tf,
                                       const QuadratureSpec& spec = {});

/**
 * Form C: the standard integrated-by-parts expression,
 *   int f_yy phi^2 - int ( d/dx[ 2 f_yyp phi + f_ypyp phi' ] ) phi dx
 * with the true total derivative along the trajectory,
 *   d/dx f_yyp  = f_xyyp  + f_yyyp  y' + f_yypyp  y''
 *   d/dx f_ypyp = f_xypyp + f_yypyp y' + f_ypypyp y''.
 * Mathematically identical to Form A at t = 0 for admissible phi. Raises
 * CapabilityError if the model's analytic provider omits the mixed-x thirds.
 */
QuadResult second_variation_ibp_standard(const LagrangianModel& model, const Trajectory& traj,
                                         const TestFunction& tf,
                                         const QuadratureSpec& spec = {});

/// Left side minus right side of the variational inequality; equals Form B.
/// Nonnegative when the inequality holds for this phi. The sign is reported,
/// never asserted.
double inequality_margin(const LagrangianModel& model, const Trajectory& traj,
                         const TestFunction& tf, const QuadratureSpec& spec = {});

/// Pass thresholds. Each matches its dominant numerical error source:
/// quadrature roundoff for the identities, integrator truncation for
/// extremal residuals, exact-zero arithmetic for bump endpoints.
struct CheckTolerances {
    double identity = 1e-9;     // relative, anchored at max(1, |A|, |C|)
    double el_solution = 1e-6;  // absolute
    double boundary = 1e-12;    // absolute
};

struct CheckOptions {
    QuadratureSpec quad;
    CheckTolerances tol;
    double shift_t = 0.0;   // Form A shift parameter
    bool check_el = true;   // gate the EL residual pass flag (reported either way)
    int el_grid = 201;
};

/**
 * Everything run_check computes. Fields that could not be evaluated are NaN
 * and the reason is appended to errors; the run itself does not abort.
 *
 * residual_AC = |A - C| / max(1, |A|, |C|) measures the identity that must
 * hold for any C^3 model; residual_AB (analogous) measures how far the
 * integrated-by-parts form is from the direct one, which is genuine output
 * for models with nonvanishing f_yyp or third partials, not a failure.
 */
struct CheckReport {
    double F_value = 0.0;
    double el_residual_max = 0.0;
    double I2_direct = 0.0;
    double I2_paper = 0.0;
    double I2_ibp_standard = 0.0;
    double residual_AB = 0.0;
    double residual_AC = 0.0;
    double inequality_margin = 0.0;
    SecondVariationTerms terms;
    BoundaryReport boundary;

    double err_F = 0.0, err_direct = 0.0, err_paper = 0.0, err_ibp = 0.0;
    bool converged = false;   // every quadrature converged

    bool boundary_ok = false;
    bool el_checked = false;  // whether el_ok participates in pass()
    bool el_ok = false;
    bool identity_ok = false; // the A-vs-C identity within tolerance
    bool degenerate = false;  // phi identically zero on the probe grid

    std::vector<std::string> errors;

    bool pass() const {
        return errors.empty() && boundary_ok && identity_ok && (!el_checked || el_ok);
    }
};

/// Run every check against one (model, trajectory, phi) configuration.
/// Component failures are recorded in the report, not thrown.
CheckReport run_check(const LagrangianModel& model, const Trajectory& traj,
                      const TestFunction& tf, const CheckOptions& opts = {});

} // namespace varineq
