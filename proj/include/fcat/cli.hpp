#pragma once

// The fcat command line: table, domain, profile, mesh and verify.

#include <iosfwd>
#include <string>
#include <vector>

namespace fcat {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitInternal = 3,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 10 significant digits with trailing zeros dropped.
std::string format_number(double x);

}  // namespace fcat
