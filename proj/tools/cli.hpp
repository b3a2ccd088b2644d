#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltcert::cli {

/// Exit codes: 0 success or certified, 1 failed or inconclusive, 2 usage or input error.
enum ExitCode : int { kOk = 0, kNotCertified = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltcert::cli
