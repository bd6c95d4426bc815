#include "varineq/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "varineq/config.hpp"
#include "varineq/pendulum.hpp"
#include "varineq/report_io.hpp"
#include "varineq/second_variation.hpp"

namespace varineq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PendulumParams pendulum_params(const RunConfig& cfg) {
    return PendulumParams{cfg.m, cfg.ell, cfg.g, cfg.theta0};
}

const CatalogEntry& catalog_entry(const std::string& problem) {
    for (const auto& entry : catalog())
        if (entry.name == problem) return entry;
    std::string valid;
    for (const auto& entry : catalog()) {
        if (!valid.empty()) valid += ", ";
        valid += entry.name;
    }
    throw NotFoundError("unknown model '" + problem + "'; valid models: " + valid);
}

void require_supported_trajectory(const CatalogEntry& entry, const std::string& kind) {
    std::string valid;
    for (const auto& t : entry.trajectories) {
        if (t == kind) return;
        if (!valid.empty()) valid += ", ";
        valid += t;
    }
    throw ConfigError("trajectory '" + kind + "' is not available for '" + entry.name +
                      "'; choose one of: " + valid);
}

void require_covers(const Interval& have, const Interval& want, const std::string& what) {
    if (!have.contains(want.alpha) || !have.contains(want.beta)) {
        std::ostringstream os;
        os << what << " covers [" << have.alpha << ", " << have.beta
           << "] but the run interval is [" << want.alpha << ", " << want.beta << "]";
        throw ConfigError(os.str());
    }
}

Trajectory build_trajectory(const RunConfig& cfg, const Interval& iv) {
    const CatalogEntry& entry = catalog_entry(cfg.problem);
    require_supported_trajectory(entry, cfg.trajectory);
    if (cfg.trajectory == "equilibrium") return equilibrium_trajectory(iv, 0.0);
    if (cfg.trajectory == "linear") return linear_trajectory(iv, iv.alpha, 1.0); // the line y = x
    if (cfg.trajectory == "separatrix")
        return separatrix_trajectory(pendulum_params(cfg), iv);
    if (cfg.trajectory == "rk4") {
        const PendulumParams p = pendulum_params(cfg);
        // Start RK4 from the closed-form state at the left endpoint so the
        // numerical trajectory tracks the exact one on any interval.
        const SeparatrixState s0 = separatrix_state(p, iv.alpha);
        return rk4_integrate(p, s0.theta, s0.theta_dot, iv, cfg.steps);
    }
    if (cfg.trajectory == "sampled") {
        if (cfg.trajectory_file.empty())
            throw ConfigError("trajectory = sampled requires trajectory_file");
        Trajectory t = sampled_trajectory_from_csv(cfg.trajectory_file);
        require_covers(t.interval, iv, "sampled trajectory");
        t.interval = iv;
        return t;
    }
    throw ConfigError("unknown trajectory '" + cfg.trajectory +
                      "'; choose equilibrium, linear, separatrix, rk4, or sampled");
}

TestFunction build_phi(const RunConfig& cfg, const Interval& iv) {
    if (cfg.phi == "poly_bump")
        return TestFunction::poly_bump(iv, cfg.lambda, cfg.n, cfg.allow_large_n);
    if (cfg.phi == "sampled") {
        if (cfg.phi_file.empty()) throw ConfigError("phi = sampled requires phi_file");
        TestFunction tf = TestFunction::sampled_from_csv(cfg.phi_file);
        require_covers(tf.interval(), iv, "sampled phi");
        return tf;
    }
    throw ConfigError("unknown phi kind '" + cfg.phi + "'; choose poly_bump or sampled");
}

bool solution_kind(const std::string& kind) {
    return kind == "equilibrium" || kind == "separatrix" || kind == "rk4";
}

ConfigEcho make_echo(const RunConfig& cfg) {
    ConfigEcho e;
    e.problem = cfg.problem;
    e.trajectory = cfg.trajectory;
    e.phi_kind = cfg.phi;
    e.alpha = cfg.alpha;
    e.beta = cfg.beta;
    if (cfg.phi == "poly_bump") {
        e.lambda = cfg.lambda;
        e.n = cfg.n;
    } else {
        e.phi_file = cfg.phi_file;
    }
    if (cfg.trajectory == "sampled") e.trajectory_file = cfg.trajectory_file;
    if (cfg.problem == "pendulum") {
        e.m = cfg.m;
        e.ell = cfg.ell;
        e.g = cfg.g;
        e.theta0 = cfg.theta0;
        if (cfg.trajectory == "separatrix" || cfg.trajectory == "rk4") {
            try {
                e.theta_dot0 = separatrix_initial_rate(pendulum_params(cfg));
            } catch (const std::exception&) {
                // leave NaN; the trajectory build reports the real problem
            }
        }
    } else if (cfg.problem == "harmonic" || cfg.problem == "poly") {
        e.k = cfg.k;
    }
    e.rule = cfg.rule;
    e.panels = cfg.panels;
    e.tol = cfg.tol;
    e.max_panels = cfg.max_panels;
    if (cfg.trajectory == "rk4") e.steps = cfg.steps;
    e.shift_t = cfg.shift_t;
    return e;
}

ReportRow evaluate(const RunConfig& cfg) {
    const Interval iv(cfg.alpha, cfg.beta);
    const LagrangianModel model = make_model(cfg.problem, {{"m", cfg.m},
                                                           {"ell", cfg.ell},
                                                           {"g", cfg.g},
                                                           {"k", cfg.k}});
    const Trajectory traj = build_trajectory(cfg, iv);
    const TestFunction tf = build_phi(cfg, iv);

    CheckOptions opts;
    opts.quad.rule = parse_rule(cfg.rule);
    opts.quad.panels = cfg.panels;
    opts.quad.tol = cfg.tol;
    opts.quad.max_panels = cfg.max_panels;
    opts.quad.validate();
    opts.shift_t = cfg.shift_t;
    opts.el_grid = cfg.el_grid;
    // The extremal-residual pass flag only makes sense for trajectories that
    // claim to solve the Euler-Lagrange equation.
    opts.check_el = solution_kind(cfg.trajectory);

    ReportRow row;
    row.echo = make_echo(cfg);
    row.check = run_check(model, traj, tf, opts);
    if (cfg.problem == "pendulum") {
        try {
            row.margin38 = inequality38_margin(pendulum_params(cfg), traj, tf, opts.quad);
        } catch (const std::exception& e) {
            row.check.errors.push_back(std::string("specialized margin: ") + e.what());
        }
    }
    return row;
}

ReportRow error_row(const RunConfig& cfg, const std::string& msg) {
    ReportRow row;
    row.echo = make_echo(cfg);
    CheckReport& c = row.check;
    c.F_value = c.el_residual_max = kNaN;
    c.I2_direct = c.I2_paper = c.I2_ibp_standard = kNaN;
    c.residual_AB = c.residual_AC = c.inequality_margin = kNaN;
    c.errors.push_back(msg);
    return row;
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
    if (cfg.out.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        err << "error: cannot write output file '" << cfg.out << "'\n";
        return 1;
    }
    f << text;
    return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.format != "human" && cfg.format != "json" && cfg.format != "csv")
        throw ConfigError("format must be human, json, or csv, got '" + cfg.format + "'");
    const ReportRow row = evaluate(cfg);
    std::string text;
    if (cfg.format == "json")
        text = to_json(row);
    else if (cfg.format == "csv")
        text = csv_header() + "\n" + to_csv_row(row) + "\n";
    else
        text = to_human(row);
    if (emit(cfg, text, out, err) != 0) return 1;

    const CheckReport& c = row.check;
    if (!c.errors.empty()) return 1;
    if (!c.boundary_ok || !c.identity_ok || (c.el_checked && !c.el_ok)) return 2;
    if (c.inequality_margin < 0.0) return 3;
    return 0;
}

struct SweepAxes {
    std::vector<double> lambda, theta0, beta;
    std::vector<int> n;

    bool empty() const { return lambda.empty() && theta0.empty() && beta.empty() && n.empty(); }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

SweepAxes parse_axes(const std::vector<std::string>& specs) {
    SweepAxes axes;
    for (const auto& spec : specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw ConfigError("axis '" + spec + "' must look like key=v1,v2,...");
        const std::string key = spec.substr(0, eq);
        const std::string rest = spec.substr(eq + 1);
        if (rest.empty())
            throw ConfigError("axis '" + key + "' has no values");
        for (const auto& tok : split(rest, ',')) {
            RunConfig probe; // reuse the config parsers for consistent errors
            apply_config_value(probe, key, tok);
            if (key == "lambda") axes.lambda.push_back(probe.lambda);
            else if (key == "n") axes.n.push_back(probe.n);
            else if (key == "theta0") axes.theta0.push_back(probe.theta0);
            else if (key == "beta") axes.beta.push_back(probe.beta);
            else
                throw ConfigError("axis key must be one of lambda, n, theta0, beta; got '" +
                                  key + "'");
        }
    }
    return axes;
}

int cmd_sweep(const RunConfig& base, const std::vector<std::string>& axis_specs,
              std::ostream& out, std::ostream& err) {
    const SweepAxes axes = parse_axes(axis_specs);
    if (axes.empty())
        throw ConfigError("sweep requires at least one --axis key=v1,v2,...");
    if (base.phi != "poly_bump" && (!axes.lambda.empty() || !axes.n.empty()))
        throw ConfigError("lambda and n axes require phi = poly_bump");
    if (base.problem != "pendulum" && !axes.theta0.empty())
        throw ConfigError("the theta0 axis applies only to the pendulum problem");

    // Missing axes collapse to the configured value, so the loop below is
    // always the fixed nesting lambda > n > theta0 > beta.
    const std::vector<double> ls = axes.lambda.empty() ? std::vector<double>{base.lambda}
                                                       : axes.lambda;
    const std::vector<int> ns = axes.n.empty() ? std::vector<int>{base.n} : axes.n;
    const std::vector<double> ts = axes.theta0.empty() ? std::vector<double>{base.theta0}
                                                       : axes.theta0;
    const std::vector<double> bs = axes.beta.empty() ? std::vector<double>{base.beta}
                                                     : axes.beta;

    std::vector<RunConfig> combos;
    combos.reserve(ls.size() * ns.size() * ts.size() * bs.size());
    for (double l : ls)
        for (int n : ns)
            for (double t : ts)
                for (double b : bs) {
                    RunConfig cfg = base;
                    cfg.lambda = l;
                    cfg.n = n;
                    cfg.theta0 = t;
                    cfg.beta = b;
                    combos.push_back(cfg);
                }

    std::vector<std::string> rows(combos.size());
    const auto count = static_cast<std::ptrdiff_t>(combos.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const RunConfig& cfg = combos[static_cast<std::size_t>(i)];
        std::string row;
        try {
            row = to_csv_row(evaluate(cfg));
        } catch (const std::exception& e) {
            row = to_csv_row(error_row(cfg, e.what()));
        } catch (...) {
            row = to_csv_row(error_row(cfg, "unknown error"));
        }
        rows[static_cast<std::size_t>(i)] = row;
    }

    std::ostringstream text;
    text << csv_header() << "\n";
    for (const auto& row : rows) text << row << "\n";
    return emit(base, text.str(), out, err) != 0 ? 1 : 0;
}

int cmd_catalog(bool as_json, std::ostream& out) {
    if (as_json) {
        std::ostringstream os;
        os << "[\n";
        bool first_entry = true;
        for (const auto& entry : catalog()) {
            if (!first_entry) os << ",\n";
            first_entry = false;
            os << "  {\"name\": \"" << entry.name << "\", \"params\": {";
            bool first = true;
            for (const auto& [key, value] : entry.params) {
                if (!first) os << ", ";
                first = false;
                os << "\"" << key << "\": " << detail::fmt_double(value);
            }
            os << "}, \"trajectories\": [";
            first = true;
            for (const auto& t : entry.trajectories) {
                if (!first) os << ", ";
                first = false;
                os << "\"" << t << "\"";
            }
            os << "]}";
        }
        os << "\n]\n";
        out << os.str();
        return 0;
    }
    for (const auto& entry : catalog()) {
        out << entry.name << "\n  params:";
        if (entry.params.empty()) out << " (none)";
        for (const auto& [key, value] : entry.params)
            out << " " << key << "=" << detail::fmt_double(value);
        out << "\n  trajectories:";
        for (const auto& t : entry.trajectories) out << " " << t;
        out << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical checks of second-order conditions in the 1-D calculus of variations"};
    app.name("varineq");
    app.require_subcommand(1);

    std::string config_file;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::vector<std::string> axis_specs;
    bool cat_json = false;

    auto* check = app.add_subcommand("check", "run every check for one configuration");
    auto* sweep = app.add_subcommand(
        "sweep", "run checks over axis grids and emit one CSV row per combination");
    auto* cat = app.add_subcommand("catalog", "list the built-in models");
    cat->add_flag("--json", cat_json, "emit the listing as JSON");
    sweep->add_option("--axis", axis_specs,
                      "axis values, key=v1,v2,... with key in {lambda, n, theta0, beta};"
                      " repeatable");

    for (CLI::App* cmd : {check, sweep}) {
        cmd->add_option("--config", config_file, "key = value configuration file");
        auto add = [cmd, &overrides](const std::string& flag, const std::string& key,
                                     const std::string& desc) {
            cmd->add_option_function<std::string>(
                flag,
                [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); },
                desc);
        };
        add("--problem", "problem", "catalog model name");
        add("--trajectory", "trajectory", "equilibrium, linear, separatrix, rk4, or sampled");
        add("--trajectory-file", "trajectory_file", "CSV with columns x,y,yp");
        add("--phi", "phi", "poly_bump or sampled");
        add("--phi-file", "phi_file", "CSV with columns x,phi,phi_prime");
        add("--alpha", "alpha", "left endpoint");
        add("--beta", "beta", "right endpoint");
        add("--lambda", "lambda", "bump amplitude (> 0)");
        add("--n", "n", "bump order (integer >= 3)");
        add("--m", "m", "pendulum mass");
        add("--ell", "ell", "pendulum length");
        add("--g", "g", "gravitational acceleration");
        add("--theta0", "theta0", "initial angle in (0, pi)");
        add("--k", "k", "harmonic / poly coefficient");
        add("--rule", "rule", "gauss5 or simpson");
        add("--panels", "panels", "initial quadrature panels");
        add("--tol", "tol", "quadrature refinement tolerance");
        add("--max-panels", "max_panels", "quadrature panel cap");
        add("--steps", "steps", "rk4 step count");
        add("--shift-t", "shift_t", "shift parameter for the direct form");
        add("--el-grid", "el_grid", "Euler-Lagrange residual grid size");
        add("--format", "format", "human, json, or csv (check only; sweep emits CSV)");
        add("--out", "out", "write the report to this file instead of stdout");
        cmd->add_flag_callback(
            "--allow-large-n",
            [&overrides]() { overrides.emplace_back("allow_large_n", "true"); },
            "lift the n <= 12 bump-order cap");
    }

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("varineq");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (cat->parsed()) return cmd_catalog(cat_json, out);
        RunConfig cfg;
        if (!config_file.empty()) cfg = load_config_file(config_file);
        for (const auto& [key, value] : overrides) apply_config_value(cfg, key, value);
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (sweep->parsed()) return cmd_sweep(cfg, axis_specs, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace varineq
