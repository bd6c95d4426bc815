#include "varineq/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

namespace varineq {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d))
        throw ConfigError("value for '" + key + "' must be a finite number, got '" + value + "'");
    return d;
}

int parse_int(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const long l = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size())
        throw ConfigError("value for '" + key + "' must be an integer, got '" + value + "'");
    return static_cast<int>(l);
}

bool parse_bool(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("value for '" + key + "' must be a boolean, got '" + value + "'");
}

} // namespace

void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "problem") cfg.problem = trim(value);
    else if (key == "trajectory") cfg.trajectory = trim(value);
    else if (key == "trajectory_file") cfg.trajectory_file = trim(value);
    else if (key == "phi") cfg.phi = trim(value);
    else if (key == "phi_file") cfg.phi_file = trim(value);
    else if (key == "alpha") cfg.alpha = parse_double(key, value);
    else if (key == "beta") cfg.beta = parse_double(key, value);
    else if (key == "lambda") cfg.lambda = parse_double(key, value);
    else if (key == "n") cfg.n = parse_int(key, value);
    else if (key == "allow_large_n") cfg.allow_large_n = parse_bool(key, value);
    else if (key == "m") cfg.m = parse_double(key, value);
    else if (key == "ell") cfg.ell = parse_double(key, value);
    else if (key == "g") cfg.g = parse_double(key, value);
    else if (key == "theta0") cfg.theta0 = parse_double(key, value);
    else if (key == "k") cfg.k = parse_double(key, value);
    else if (key == "rule") cfg.rule = trim(value);
    else if (key == "panels") cfg.panels = parse_int(key, value);
    else if (key == "tol") cfg.tol = parse_double(key, value);
    else if (key == "max_panels") cfg.max_panels = parse_int(key, value);
    else if (key == "steps") cfg.steps = parse_int(key, value);
    else if (key == "shift_t") cfg.shift_t = parse_double(key, value);
    else if (key == "el_grid") cfg.el_grid = parse_int(key, value);
    else if (key == "format") cfg.format = trim(value);
    else if (key == "out") cfg.out = trim(value);
    else throw ConfigError("unknown key '" + key + "'");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '[' && body.back() == ']') continue; // section header
        const auto eq = body.find('=');
        const std::string where = path + ":" + std::to_string(lineno) + ": ";
        if (eq == std::string::npos)
            throw ConfigError(where + "expected key = value");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = body.substr(eq + 1);
        if (key.empty()) throw ConfigError(where + "missing key before '='");
        try {
            apply_config_value(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
    return cfg;
}

} // namespace varineq
