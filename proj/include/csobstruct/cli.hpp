#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csobstruct::cli {

/// Exit codes returned by run().
enum ExitCode : int { kOk = 0, kRejected = 1, kUsage = 2 };

/// Runs one command. args excludes the program name. Usage errors print
/// the relevant help text to err and return kUsage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace csobstruct::cli
