#pragma once

#include <string>

#include "varineq/errors.hpp"

namespace varineq {

/**
 * Flat run configuration shared by the check and sweep commands. Defaults
 * describe the worked pendulum example: the critical-energy trajectory on
 * [0, 2] probed with the n = 3 unit bump.
 *
 * File format: one `key = value` per line, `#` comments, blank lines and
 * `[section]` headers ignored. Every key has a matching command-line flag
 * and flags win over file values.
 */
struct RunConfig {
    std::string problem = "pendulum";
    std::string trajectory = "separatrix"; // equilibrium|linear|separatrix|rk4|sampled
    std::string trajectory_file;           // data for trajectory = sampled
    std::string phi = "poly_bump";         // poly_bump|sampled
    std::string phi_file;                  // data for phi = sampled
    double alpha = 0.0;
    double beta = 2.0;
    double lambda = 1.0;
    int n = 3;
    bool allow_large_n = false;
    double m = 1.0;
    double ell = 1.0;
    double g = 9.8;
    double theta0 = 1.5707963267948966; // pi/2
    double k = 1.0;
    std::string rule = "gauss5";
    int panels = 8;
    double tol = 1e-12;
    int max_panels = 4096;
    int steps = 10000;
    double shift_t = 0.0;
    int el_grid = 201;
    std::string format = "human"; // human|json|csv
    std::string out;              // output path; empty writes to stdout
};

/// Set one key. Unknown keys and unparseable values raise ConfigError.
void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parse a config file over the defaults. Errors carry "path:line:".
RunConfig load_config_file(const std::string& path);

} // namespace varineq
