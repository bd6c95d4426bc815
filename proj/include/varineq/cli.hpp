#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varineq {

/**
 * Full command-line front end: `check`, `sweep`, and `catalog`.
 *
 * args excludes the program name. Returns the process exit code:
 *   0  every enabled check passed (sweep: ran to completion)
 *   1  configuration, parse, or evaluation errors
 *   2  an identity or boundary check failed
 *   3  checks passed but the inequality margin is negative for this phi
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace varineq
