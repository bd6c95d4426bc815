#include <cmath>
#include <vector>

#include <doctest.h>

#include "oracle_utils.hpp"
#include "varineq/pendulum.hpp"
#include "varineq/second_variation.hpp"

using namespace varineq;

namespace {

// Exact value of both the direct form and the inequality margin for the
// pendulum at rest on [0,1] with m = ell = g = 1, phi the n = 3 unit bump:
// int phi'^2 - int phi^2 = 1/770 - 1/12012 = 73/60060.
constexpr double kRestMargin = 73.0 / 60060.0;

double anchored_gap(double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

// f = y y' is a null Lagrangian (an exact x-derivative of y^2/2), so every
// form of its second variation vanishes for admissible phi.
LagrangianModel null_lagrangian() {
    LagrangianModel model;
    model.name = "null";
    model.value = [](const Point3& p) { return p.y * p.yp; };
    model.partials = [](const Point3& p) {
        PartialSet ps;
        ps.f_y = p.yp;
        ps.f_yp = p.y;
        ps.f_yyp = 1.0;
        return ps;
    };
    return model;
}

} // namespace

TEST_CASE("functional value along simple trajectories") {
    const Interval iv{0.0, 1.0};
    const LagrangianModel pend = pendulum_model(1.0, 1.0, 1.0);
    const QuadResult at_rest = functional_value(pend, equilibrium_trajectory(iv));
    CHECK(at_rest.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(at_rest.converged);

    const QuadResult zero = functional_value(harmonic_model(1.0), equilibrium_trajectory(iv));
    CHECK(std::fabs(zero.value) < 1e-15);

    // cos(pi/2) underflows to ~6e-17, so the integral is tiny but not zero.
    const QuadResult tipped =
        functional_value(pend, equilibrium_trajectory(iv, 1.5707963267948966));
    CHECK(std::fabs(tipped.value) < 1e-15);
}

TEST_CASE("euler-lagrange residual of pendulum equilibria") {
    const Interval iv{0.0, 2.0};
    const LagrangianModel pend = pendulum_model(1.0, 1.0, 9.8);
    CHECK(el_residual(pend, equilibrium_trajectory(iv)).max_abs == 0.0);
    // sin(pi) rounds to ~1.2e-16, so the inverted equilibrium is tiny, not 0.
    CHECK(el_residual(pend, equilibrium_trajectory(iv, 3.141592653589793)).max_abs < 1e-14);
}

TEST_CASE("euler-lagrange residual profile of a non-solution") {
    // y = x in the pendulum with m = ell = g = 1: residual is exactly -sin(x).
    const Interval iv{0.0, 1.0};
    const LagrangianModel pend = pendulum_model(1.0, 1.0, 1.0);
    const ElResidualResult res = el_residual(pend, linear_trajectory(iv, 0.0, 1.0), 101);
    REQUIRE(res.x.size() == 101);
    REQUIRE(res.residual.size() == 101);
    CHECK(res.max_abs == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    for (std::size_t i = 0; i < res.x.size(); ++i)
        CHECK(std::fabs(res.residual[i] + std::sin(res.x[i])) < 1e-15);
    CHECK(res.x.front() == 0.0);
    CHECK(res.x.back() == 1.0);
    CHECK_THROWS_AS(el_residual(pend, linear_trajectory(iv, 0.0, 1.0), 1), ConfigError);
}

TEST_CASE("parallel euler-lagrange residual matches the serial reference bitwise") {
    const PendulumParams p;
    const Interval iv{0.0, 2.0};
    const Trajectory traj = separatrix_trajectory(p, iv);
    const LagrangianModel pend = pendulum_model(p.m, p.ell, p.g);
    const ElResidualResult par = el_residual(pend, traj, 999);
    const ElResidualResult ser = el_residual_serial(pend, traj, 999);
    CHECK(par.max_abs == ser.max_abs);
    REQUIRE(par.residual.size() == ser.residual.size());
    for (std::size_t i = 0; i < par.residual.size(); ++i) {
        CHECK(par.x[i] == ser.x[i]);
        CHECK(par.residual[i] == ser.residual[i]);
    }
}

TEST_CASE("direct form at the pendulum rest state matches the closed form") {
    const Interval iv{0.0, 1.0};
    const LagrangianModel pend = pendulum_model(1.0, 1.0, 1.0);
    const Trajectory rest = equilibrium_trajectory(iv);
    const TestFunction phi = TestFunction::poly_bump(iv, 1.0, 3);
    const QuadResult a = second_variation_direct(pend, rest, phi);
    CHECK(std::fabs(a.value - kRestMargin) < 1e-12 * kRestMargin);
    CHECK(a.converged);
}

TEST_CASE("both quadratic forms are homogeneous of degree 2 in lambda") {
    const Interval iv{0.0, 1.0};
    const LagrangianModel pend = pendulum_model(1.0, 1.0, 9.8);
    const Trajectory traj = separatrix_trajectory(PendulumParams{}, iv);
    oracle::Lcg rng(99u);
    for (int trial = 0; trial < 5; ++trial) {
        const double lambda = rng.uniform(0.25, 1.5);
        const TestFunction base = TestFunction::poly_bump(iv, lambda, 4);
        const TestFunction twice = TestFunction::poly_bump(iv, 2.0 * lambda, 4);
        const double a1 = second_variation_direct(pend, traj, base).value;
        const double a2 = second_variation_direct(pend, traj, twice).value;
        CHECK(std::fabs(a2 - 4.0 * a1) < 1e-12 * std::max(1.0, std::fabs(4.0 * a1)));
        const double c1 = second_variation_ibp_standard(pend, traj, base).value;
        const double c2 = second_variation_ibp_standard(pend, traj, twice).value;
        CHECK(std::fabs(c2 - 4.0 * c1) < 1e-12 * std::max(1.0, std::fabs(4.0 * c1)));
    }
}

TEST_CASE("harmonic second variation on a long interval is negative") {
    // k = 1 on [0,4]: int phi'^2 - int phi^2 with the interval past the
    // conjugate point, so the margin goes negative.
    const Interval iv{0.0, 4.0};
    const double expected = oracle::bump_dsq_integral(1.0, 3, 0.0, 4.0) -
                            oracle::bump_sq_integral(1.0, 3, 0.0, 4.0);
    REQUIRE(expected < 0.0);
    const LagrangianModel model = harmonic_model(1.0);
    const Trajectory rest = equilibrium_trajectory(iv);
    const TestFunction phi = TestFunction::poly_bump(iv, 1.0, 3);
    const double a = second_variation_direct(model, rest, phi).value;
    CHECK(std::fabs(a - expected) < 1e-12 * std::fabs(expected));
    CHECK(inequality_margin(model, rest, phi) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("pendulum term breakdown: only t1 and t5 survive") {
    const Interval iv{0.0, 1.5};
    const PendulumParams p;
    const LagrangianModel pend = pendulum_model(p.m, p.ell, p.g);
    const Trajectory traj = separatrix_trajectory(p, iv);
    const TestFunction phi = TestFunction::poly_bump(iv, 1.0, 3);
    const PaperFormResult b = second_variation_paper(pend, traj, phi);
    CHECK(b.terms.t2 == 0.0);
    CHECK(b.terms.t3 == 0.0);
    CHECK(b.terms.t4 == 0.0);
    CHECK(b.terms.t6 == 0.0);
    CHECK(b.terms.t7 == 0.0);
    CHECK(b.value == b.terms.t1 - b.terms.t5);
    // With f_yyp and all thirds zero, the integrated-by-parts form collapses
    // to the direct one (int phi phi'' = -int phi'^2 for admissible phi).
    const double a = second_variation_direct(pend, traj, phi).value;
    CHECK(anchored_gap(a, b.value) < 1e-9);
    CHECK(b.converged);
}

TEST_CASE("every form vanishes for a null lagrangian") {
    const Interval iv{0.0, 1.0};
    const LagrangianModel model = null_lagrangian();
    const Trajectory traj = linear_trajectory(iv, 0.3, -0.7);
    const TestFunction phi = TestFunction::poly_bump(iv, 1.0, 3);
    CHECK(std::fabs(second_variation_direct(model, traj, phi).value) < 1e-12);
    CHECK(std::fabs(second_variation_paper(model, traj, phi).value) < 1e-12);
    CHECK(std::fabs(second_variation_ibp_standard(model, traj, phi).value) < 1e-12);
}

TEST_CASE("direct and standard forms agree across models") {
    const TestFunction phi01 = TestFunction::poly_bump(Interval{0.0, 1.0}, 1.0, 3);

    const Trajectory line = linear_trajectory(Interval{0.0, 1.0}, 0.0, 1.0);
    const double a_arc = second_variation_direct(arclength_model(), line, phi01).value;
    const double c_arc = second_variation_ibp_standard(arclength_model(), line, phi01).value;
    CHECK(anchored_gap(a_arc, c_arc) < 1e-9);

    const Trajectory rest = equilibrium_trajectory(Interval{0.0, 1.0});
    const LagrangianModel poly = poly_model(1.0);
    const double a_poly = second_variation_direct(poly, rest, phi01).value;
    const double c_poly = second_variation_ibp_standard(poly, rest, phi01).value;
    // Along y == 0 the direct form reduces to the same rest-state integrals
    // as the pendulum: k (int phi'^2 - ... ) works out to 73 k / 60060.
    CHECK(std::fabs(a_poly - kRestMargin) < 1e-11);
    CHECK(anchored_gap(a_poly, c_poly) < 1e-9);
}

TEST_CASE("the integrated-by-parts form genuinely differs for the poly model") {
    // Nonzero f_yyp and third partials make form B depart from A and C; the
    // gap is real output, not quadrature noise.
    const Interval iv{0.0, 1.0};
    const CheckReport rep = run_check(poly_model(1.0), equilibrium_trajectory(iv),
                                      TestFunction::poly_bump(iv, 1.0, 3));
    CHECK(rep.residual_AC < 1e-9);
    CHECK(rep.residual_AB > 1e-5);
    CHECK(rep.identity_ok);
    CHECK(rep.pass());
    // Hand-derived Beta values for the five nonzero correction terms put the
    // gap near 1.9e-4 of the anchor.
    CHECK(rep.residual_AB == doctest::Approx(1.914e-4).epsilon(0.01));
}

TEST_CASE("shift parameter reduces to the unshifted form for quadratic models") {
    // The harmonic integrand's second partials are constant, so shifting the
    // evaluation path cannot change the direct form.
    const Interval iv{0.0, 2.0};
    const LagrangianModel model = harmonic_model(1.0);
    const Trajectory rest = equilibrium_trajectory(iv);
    const TestFunction phi = TestFunction::poly_bump(iv, 1.0, 3);
    const double at0 = second_variation_direct(model, rest, phi, 0.0).value;
    const double at03 = second_variation_direct(model, rest, phi, 0.3).value;
    CHECK(std::fabs(at0 - at03) < 1e-10);
    // The pendulum's f_yy depends on theta, so the shift must move the value.
    const LagrangianModel pend = pendulum_model(1.0, 1.0, 9.8);
    const double p0 = second_variation_direct(pend, rest, phi, 0.0).value;
    const double p1 = second_variation_direct(pend, rest, phi, 1.0).value;
    CHECK(std::fabs(p0 - p1) > 1e-4);
}

TEST_CASE("run_check on the resting pendulum passes everything") {
    const Interval iv{0.0, 1.0};
    CheckOptions opts;
    const CheckReport rep = run_check(pendulum_model(1.0, 1.0, 1.0),
                                      equilibrium_trajectory(iv),
                                      TestFunction::poly_bump(iv, 1.0, 3), opts);
    CHECK(rep.errors.empty());
    CHECK(rep.boundary_ok);
    CHECK(rep.identity_ok);
    CHECK(rep.el_checked);
    CHECK(rep.el_ok);
    CHECK(rep.el_residual_max == 0.0);
    CHECK(rep.inequality_margin == doctest::Approx(kRestMargin).epsilon(1e-9));
    CHECK(rep.inequality_margin > 0.0);
    CHECK(rep.residual_AC < 1e-10);
    CHECK(rep.residual_AB < 1e-10);
    CHECK(rep.converged);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.pass());
    CHECK(rep.I2_paper == rep.inequality_margin);
}

TEST_CASE("run_check reports a negative margin without failing") {
    const Interval iv{0.0, 4.0};
    const CheckReport rep = run_check(harmonic_model(1.0), equilibrium_trajectory(iv),
                                      TestFunction::poly_bump(iv, 1.0, 3));
    CHECK(rep.identity_ok);
    CHECK(rep.inequality_margin < 0.0);
    CHECK(rep.pass());
}

TEST_CASE("an identically zero sampled phi is flagged degenerate") {
    std::vector<double> xs(11), zero(11, 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = static_cast<double>(i) / 10.0;
    const TestFunction phi = TestFunction::sampled(HermiteGrid(xs, zero, zero));
    const CheckReport rep = run_check(harmonic_model(1.0),
                                      equilibrium_trajectory(Interval{0.0, 1.0}), phi);
    CHECK(rep.degenerate);
    CHECK(rep.I2_direct == 0.0);
    CHECK(rep.I2_paper == 0.0);
    CHECK(rep.I2_ibp_standard == 0.0);
    CHECK(rep.inequality_margin == 0.0);
    CHECK(rep.identity_ok);
    CHECK(rep.pass());
}

TEST_CASE("evaluation failures are recorded in the report instead of thrown") {
    LagrangianModel broken = harmonic_model(1.0);
    broken.value = [](const Point3& p) {
        return p.x < 0.5 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    };
    broken.partials = {};
    broken.fd_steps = FdSteps{};
    const Interval iv{0.0, 1.0};
    CheckReport rep;
    CHECK_NOTHROW(rep = run_check(broken, equilibrium_trajectory(iv),
                                  TestFunction::poly_bump(iv, 1.0, 3)));
    CHECK_FALSE(rep.errors.empty());
    CHECK(std::isnan(rep.F_value));
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.converged);
}

TEST_CASE("sampled trajectory columns are cross-checked for consistency") {
    const PendulumParams p;
    const Trajectory traj = separatrix_trajectory(p, Interval{0.0, 2.0});
    const ConsistencyReport rep = consistency_check(traj);
    CHECK(rep.max_yp_mismatch < 1e-6);
    CHECK(rep.max_ypp_mismatch < 1e-5);
}
