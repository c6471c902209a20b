#ifndef RMGEO_CLI_HPP
#define RMGEO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rmgeo::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, domain = 3 };

/// Runs one command line (without the program name). Honours RMGEO_PRECISION
/// (digits of `_numeric` fields) and RMGEO_STEP_BUDGET.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmgeo::cli

#endif  // RMGEO_CLI_HPP
