#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chevdv::cli {

enum ExitCode { kOk = 0, kCertificationFailure = 1, kUsage = 2 };

/// Runs one subcommand; args excludes the program name. The report goes to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chevdv::cli
