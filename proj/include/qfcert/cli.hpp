#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfcert::cli {

enum ExitCode : int { kOk = 0, kMalformed = 1, kHypothesisFailed = 2 };

/// Runs one command. `args` excludes the program name. The JSON result goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfcert::cli
