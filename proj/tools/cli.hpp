#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plesken::cli {

enum ExitCode : int
{
	success = 0,
	law_violation = 1,
	usage_error = 2,
	guard_tripped = 3,
};

/// Runs plesken-lab with the given arguments (program name excluded).
/// All report output goes to out in one write; diagnostics go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace plesken::cli
