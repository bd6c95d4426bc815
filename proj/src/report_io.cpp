#include "varineq/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace varineq {

namespace detail {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

} // namespace detail

namespace {

using detail::fmt_double;
using detail::json_escape;

// JSON number: non-finite doubles have no JSON encoding, so they become null.
std::string jnum(double v) {
    return std::isfinite(v) ? fmt_double(v) : "null";
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string jbool(bool b) { return b ? "true" : "false"; }

} // namespace

std::string to_json(const ReportRow& row) {
    const ConfigEcho& e = row.echo;
    const CheckReport& c = row.check;
    std::ostringstream os;
    os << "{\n";
    os << "  \"config\": {\n";
    os << "    \"problem\": " << jstr(e.problem) << ",\n";
    os << "    \"trajectory\": " << jstr(e.trajectory) << ",\n";
    if (!e.trajectory_file.empty())
        os << "    \"trajectory_file\": " << jstr(e.trajectory_file) << ",\n";
    os << "    \"alpha\": " << jnum(e.alpha) << ",\n";
    os << "    \"beta\": " << jnum(e.beta) << ",\n";
    os << "    \"phi\": {";
    if (e.phi_kind == "sampled") {
        os << "\"kind\": \"sampled\", \"file\": " << jstr(e.phi_file);
    } else {
        os << "\"kind\": " << jstr(e.phi_kind) << ", \"lambda\": " << jnum(e.lambda)
           << ", \"n\": " << e.n;
    }
    os << "},\n";
    os << "    \"params\": {";
    bool first = true;
    auto param = [&](const char* key, double v) {
        if (!std::isfinite(v)) return;
        if (!first) os << ", ";
        first = false;
        os << "\"" << key << "\": " << jnum(v);
    };
    param("m", e.m);
    param("ell", e.ell);
    param("g", e.g);
    param("theta0", e.theta0);
    param("k", e.k);
    os << "},\n";
    os << "    \"quadrature\": {\"rule\": " << jstr(e.rule) << ", \"panels\": " << e.panels
       << ", \"tol\": " << jnum(e.tol) << ", \"max_panels\": " << e.max_panels << "},\n";
    if (e.steps > 0) os << "    \"steps\": " << e.steps << ",\n";
    os << "    \"shift_t\": " << jnum(e.shift_t) << "\n";
    os << "  },\n";
    os << "  \"results\": {\n";
    os << "    \"F_value\": " << jnum(c.F_value) << ",\n";
    os << "    \"el_residual_max\": " << jnum(c.el_residual_max) << ",\n";
    os << "    \"I2_direct\": " << jnum(c.I2_direct) << ",\n";
    os << "    \"I2_paper\": " << jnum(c.I2_paper) << ",\n";
    os << "    \"I2_ibp_standard\": " << jnum(c.I2_ibp_standard) << ",\n";
    os << "    \"residual_AB\": " << jnum(c.residual_AB) << ",\n";
    os << "    \"residual_AC\": " << jnum(c.residual_AC) << ",\n";
    os << "    \"inequality_margin\": " << jnum(c.inequality_margin) << ",\n";
    os << "    \"margin38\": " << jnum(row.margin38) << ",\n";
    if (std::isfinite(e.theta_dot0))
        os << "    \"theta_dot0\": " << jnum(e.theta_dot0) << ",\n";
    os << "    \"terms\": {"
       << "\"t1\": " << jnum(c.terms.t1) << ", \"t2\": " << jnum(c.terms.t2)
       << ", \"t3\": " << jnum(c.terms.t3) << ", \"t4\": " << jnum(c.terms.t4)
       << ", \"t5\": " << jnum(c.terms.t5) << ", \"t6\": " << jnum(c.terms.t6)
       << ", \"t7\": " << jnum(c.terms.t7) << "},\n";
    os << "    \"boundary\": {"
       << "\"phi_alpha\": " << jnum(c.boundary.phi_alpha)
       << ", \"dphi_alpha\": " << jnum(c.boundary.dphi_alpha)
       << ", \"d2phi_alpha\": " << jnum(c.boundary.d2phi_alpha)
       << ", \"phi_beta\": " << jnum(c.boundary.phi_beta)
       << ", \"dphi_beta\": " << jnum(c.boundary.dphi_beta)
       << ", \"d2phi_beta\": " << jnum(c.boundary.d2phi_beta)
       << ", \"tol\": " << jnum(c.boundary.tol)
       << ", \"ok\": " << jbool(c.boundary.ok) << "},\n";
    os << "    \"error_estimates\": {"
       << "\"F\": " << jnum(c.err_F) << ", \"direct\": " << jnum(c.err_direct)
       << ", \"paper\": " << jnum(c.err_paper) << ", \"ibp_standard\": " << jnum(c.err_ibp)
       << "},\n";
    os << "    \"converged\": " << jbool(c.converged) << ",\n";
    os << "    \"boundary_ok\": " << jbool(c.boundary_ok) << ",\n";
    os << "    \"el_checked\": " << jbool(c.el_checked) << ",\n";
    os << "    \"el_ok\": " << jbool(c.el_ok) << ",\n";
    os << "    \"identity_ok\": " << jbool(c.identity_ok) << ",\n";
    os << "    \"degenerate\": " << jbool(c.degenerate) << ",\n";
    os << "    \"errors\": [";
    for (std::size_t i = 0; i < c.errors.size(); ++i)
        os << (i ? ", " : "") << jstr(c.errors[i]);
    os << "]\n";
    os << "  },\n";
    os << "  \"pass\": " << jbool(c.pass()) << "\n";
    os << "}\n";
    return os.str();
}

std::string csv_header() {
    return "problem,trajectory,alpha,beta,lambda,n,m,ell,g,theta0,F_value,"
           "el_residual_max,I2_direct,I2_paper,I2_ibp_standard,residual_AB,"
           "residual_AC,inequality_margin,margin38,boundary_ok,converged";
}

std::string to_csv_row(const ReportRow& row) {
    const ConfigEcho& e = row.echo;
    const CheckReport& c = row.check;
    std::ostringstream os;
    os << e.problem << ',' << e.trajectory << ',' << fmt_double(e.alpha) << ','
       << fmt_double(e.beta) << ',' << fmt_double(e.lambda) << ',' << e.n << ','
       << fmt_double(e.m) << ',' << fmt_double(e.ell) << ',' << fmt_double(e.g) << ','
       << fmt_double(e.theta0) << ',' << fmt_double(c.F_value) << ','
       << fmt_double(c.el_residual_max) << ',' << fmt_double(c.I2_direct) << ','
       << fmt_double(c.I2_paper) << ',' << fmt_double(c.I2_ibp_standard) << ','
       << fmt_double(c.residual_AB) << ',' << fmt_double(c.residual_AC) << ','
       << fmt_double(c.inequality_margin) << ',' << fmt_double(row.margin38) << ','
       << jbool(c.boundary_ok) << ',' << jbool(c.converged);
    return os.str();
}

std::string to_human(const ReportRow& row) {
    const ConfigEcho& e = row.echo;
    const CheckReport& c = row.check;
    std::ostringstream os;
    os << "problem:    " << e.problem;
    {
        std::ostringstream ps;
        bool first = true;
        auto param = [&](const char* key, double v) {
            if (!std::isfinite(v)) return;
            ps << (first ? "" : ", ") << key << "=" << fmt_double(v);
            first = false;
        };
        param("m", e.m);
        param("ell", e.ell);
        param("g", e.g);
        param("theta0", e.theta0);
        param("k", e.k);
        if (!first) os << " (" << ps.str() << ")";
    }
    os << "\n";
    os << "trajectory: " << e.trajectory << " on [" << fmt_double(e.alpha) << ", "
       << fmt_double(e.beta) << "]";
    if (!e.trajectory_file.empty()) os << " from " << e.trajectory_file;
    if (e.steps > 0) os << ", " << e.steps << " steps";
    os << "\n";
    os << "phi:        ";
    if (e.phi_kind == "sampled")
        os << "sampled from " << e.phi_file;
    else
        os << "poly_bump(lambda=" << fmt_double(e.lambda) << ", n=" << e.n << ")";
    os << "\n";
    os << "quadrature: " << e.rule << ", panels " << e.panels << ".." << e.max_panels
       << ", tol " << fmt_double(e.tol) << "\n\n";

    os << "F_value           = " << fmt_double(c.F_value) << "\n";
    os << "el_residual_max   = " << fmt_double(c.el_residual_max);
    if (c.el_checked) os << (c.el_ok ? "  [ok]" : "  [FAIL]");
    os << "\n";
    os << "I2_direct         = " << fmt_double(c.I2_direct) << "\n";
    os << "I2_paper          = " << fmt_double(c.I2_paper) << "\n";
    os << "I2_ibp_standard   = " << fmt_double(c.I2_ibp_standard) << "\n";
    os << "residual_AB       = " << fmt_double(c.residual_AB) << "\n";
    os << "residual_AC       = " << fmt_double(c.residual_AC)
       << (c.identity_ok ? "  [ok]" : "  [FAIL]") << "\n";
    os << "inequality_margin = " << fmt_double(c.inequality_margin);
    if (std::isfinite(c.inequality_margin)) {
        os << (c.inequality_margin >= 0.0 ? "  -> inequality holds for this phi"
                                          : "  -> inequality violated for this phi");
    }
    os << "\n";
    if (std::isfinite(row.margin38))
        os << "margin38          = " << fmt_double(row.margin38) << "\n";
    if (std::isfinite(e.theta_dot0))
        os << "theta_dot0        = " << fmt_double(e.theta_dot0) << "\n";
    os << "boundary_ok       = " << jbool(c.boundary_ok) << "\n";
    os << "converged         = " << jbool(c.converged) << "\n";
    if (c.degenerate) os << "note: degenerate variation (phi is identically zero)\n";
    for (const auto& err : c.errors) os << "error: " << err << "\n";
    os << "verdict: " << (c.pass() ? "pass" : "fail") << "\n";
    return os.str();
}

} // namespace varineq
