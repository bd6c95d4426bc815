#pragma once

#include <limits>
#include <string>

#include "varineq/second_variation.hpp"

namespace varineq {

/// Everything about the requested configuration that reports echo back.
/// NaN / empty means "not part of this configuration" (for example m, ell,
/// g, theta0 are only set for pendulum runs) and serializes as null or nan.
struct ConfigEcho {
    std::string problem;
    std::string trajectory;
    std::string phi_kind;        // "poly_bump" or "sampled"
    std::string phi_file;        // sampled phi source, if any
    std::string trajectory_file; // sampled trajectory source, if any
    double alpha = 0.0;
    double beta = 1.0;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    int n = 0;
    double m = std::numeric_limits<double>::quiet_NaN();
    double ell = std::numeric_limits<double>::quiet_NaN();
    double g = std::numeric_limits<double>::quiet_NaN();
    double theta0 = std::numeric_limits<double>::quiet_NaN();
    double k = std::numeric_limits<double>::quiet_NaN();
    std::string rule = "gauss5";
    int panels = 8;
    double tol = 1e-12;
    int max_panels = 4096;
    int steps = 0;        // rk4 only
    double shift_t = 0.0;
    double theta_dot0 = std::numeric_limits<double>::quiet_NaN(); // solution kinds, reported
};

/// One complete check outcome: the echo, the engine report, and the
/// pendulum-specialized margin (NaN for other models).
struct ReportRow {
    ConfigEcho echo;
    CheckReport check;
    double margin38 = std::numeric_limits<double>::quiet_NaN();
};

/// Deterministic serializations: fixed key order, 17 significant digits,
/// no timestamps or environment-dependent content, so identical
/// configurations always produce byte-identical output.
std::string to_json(const ReportRow& row);

/// The fixed CSV column list, comma-joined.
std::string csv_header();

/// One CSV row matching csv_header(); non-finite numerics print as nan,
/// booleans as true/false.
std::string to_csv_row(const ReportRow& row);

/// Multi-line human-readable summary.
std::string to_human(const ReportRow& row);

namespace detail {
/// Shortest round-trip style decimal rendering (17 significant digits).
std::string fmt_double(double v);
std::string json_escape(const std::string& s);
} // namespace detail

} // namespace varineq
