// Times the OpenMP kernels against their serial references and verifies the
// two produce bit-identical results. Pass --smoke for a fast run suitable
// for CI.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>

#include "varineq/pendulum.hpp"
#include "varineq/quadrature.hpp"
#include "varineq/second_variation.hpp"

using namespace varineq;

namespace {

template <typename Fn>
double best_ms(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms, speedup " << serial_ms / parallel_ms << "x, match "
              << (match ? "yes" : "NO") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    const bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;
    const int reps = smoke ? 2 : 5;
    bool all_match = true;

    {
        // Fixed panel count (panels == max_panels) so both paths do exactly
        // one composite pass over the same abscissas.
        const Interval iv(0.0, 2.0);
        const Integrand g = [](double x) { return std::exp(std::sin(25.0 * x)); };
        QuadratureSpec spec;
        spec.panels = smoke ? 1024 : 262144;
        spec.max_panels = spec.panels;

        QuadResult qp, qs;
        const double tp = best_ms(reps, [&] { qp = integrate(g, iv, spec); });
        const double ts = best_ms(reps, [&] { qs = integrate_serial(g, iv, spec); });
        const bool match = qp.value == qs.value;
        all_match = all_match && match;
        report("quadrature panels", ts, tp, match);
    }

    {
        PendulumParams p;
        const Interval iv(0.0, 2.0);
        const Trajectory traj = separatrix_trajectory(p, iv);
        const LagrangianModel model = pendulum_model(p.m, p.ell, p.g);
        const int grid = smoke ? 2001 : 200001;

        ElResidualResult rp, rs;
        const double tp = best_ms(reps, [&] { rp = el_residual(model, traj, grid); });
        const double ts = best_ms(reps, [&] { rs = el_residual_serial(model, traj, grid); });
        bool match = rp.max_abs == rs.max_abs && rp.residual.size() == rs.residual.size();
        for (std::size_t i = 0; match && i < rp.residual.size(); ++i)
            match = rp.residual[i] == rs.residual[i];
        all_match = all_match && match;
        report("euler-lagrange grid", ts, tp, match);
    }

    if (!all_match) {
        std::cout << "FAIL: parallel and serial kernels disagree\n";
        return 1;
    }
    std::cout << "kernels agree bitwise\n";
    return 0;
}
