#ifndef POLYTRUNC_TOOLS_CLI_HPP
#define POLYTRUNC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polytrunc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // bad arguments, unreadable or invalid input
inline constexpr int kExitViolation = 2;  // a checked property failed

/// Schema tag carried by every machine-readable record.
inline constexpr const char* kReportSchema = "polytrunc-report/1";

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytrunc::cli

#endif  // POLYTRUNC_TOOLS_CLI_HPP
