#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace porism {

/// Exit codes of the command line tool.
enum ExitCode : int { kSatisfied = 0, kNotSatisfied = 1, kInputError = 2 };

/// Runs the command line tool on args (without the program name). Reports
/// go to out; errors go to err as {"error": CODE, "message": ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace porism
