#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "varineq/errors.hpp"

namespace varineq {

/// Evaluation point (x, y, y') of a Lagrangian f(x, y, y').
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double yp = 0.0;

    void validate() const;
};

/**
 * All partial derivatives of f used anywhere in the toolkit, at one point.
 *
 * First and second partials feed the Euler-Lagrange residual and the direct
 * second variation; the third partials feed the two integrated-by-parts
 * forms. The x-mixed entries (f_xyp, f_xyyp, f_xypyp) are the pieces of the
 * total x-derivative of f_yp, f_yyp and f_ypyp along a trajectory.
 */
struct PartialSet {
    double f = 0.0;
    double f_y = 0.0, f_yp = 0.0;
    double f_yy = 0.0, f_yyp = 0.0, f_ypyp = 0.0;
    double f_yyyp = 0.0, f_yypyp = 0.0, f_ypypyp = 0.0;
    double f_xyp = 0.0;                 // d2f/dxdy'
    double f_xyyp = 0.0, f_xypyp = 0.0; // d3f/dxdydy', d3f/dxdy'2
};

/// Central-difference step sizes per derivative order, scaled internally by
/// max(1, |coordinate|). Defaults are eps^(1/(k+2)) for order k, balancing
/// truncation against rounding.
struct FdSteps {
    double first = 6.0554544523933395e-06;   // eps^(1/3)
    double second = 1.2207031250000000e-04;  // eps^(1/4)
    double third = 7.4009597974140505e-04;   // eps^(1/5)

    void validate() const;
};

using ValueFn = std::function<double(const Point3&)>;
using PartialsFn = std::function<PartialSet(const Point3&)>;

/**
 * A Lagrangian together with its derivative provider.
 *
 * Analytic models supply a closed-form PartialSet callback and are exact and
 * deterministic (bit-identical repeated evaluations). Numeric models supply
 * only the value callback; partials come from central differences at the
 * configured steps, with documented accuracy of roughly 1e-10 / 1e-7 / 1e-4
 * relative to the function scale for first / second / third order.
 */
struct LagrangianModel {
    std::string name;
    ValueFn value;                    // required
    PartialsFn partials;              // analytic provider, may be empty
    std::optional<FdSteps> fd_steps;  // numeric provider configuration
    bool mixed_x_supported = true;    // false if the analytic provider omits f_xyp/f_xyyp/f_xypyp

    bool analytic() const { return static_cast<bool>(partials); }
};

/// Evaluate all partials of the model at p. Analytic path when available,
/// finite differences otherwise. Non-finite results raise EvaluationError
/// naming the offending field.
PartialSet eval_partials(const LagrangianModel& model, const Point3& p);

/// Central-difference estimate of every PartialSet field from a value-only
/// callback. The callback must be finite within 3*max(steps) of p.
PartialSet fd_partials(const ValueFn& value_fn, const Point3& p, const FdSteps& steps);

using ParamMap = std::map<std::string, double>;

/// One catalog entry: stable name, parameter keys with defaults, and which
/// trajectory kinds the CLI accepts for it.
struct CatalogEntry {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::string> trajectories;
    std::function<LagrangianModel(const ParamMap&)> make;
};

/// The built-in models: pendulum, harmonic, arclength, poly.
const std::vector<CatalogEntry>& catalog();

/// Build a catalog model by name; missing params take their defaults.
/// Unknown names raise NotFoundError listing the valid ones.
LagrangianModel make_model(const std::string& name, const ParamMap& params = {});

// Direct constructors, convenient for tests and library use.
LagrangianModel pendulum_model(double m, double ell, double g);
LagrangianModel harmonic_model(double k);
LagrangianModel arclength_model();
LagrangianModel poly_model(double k);

} // namespace varineq
