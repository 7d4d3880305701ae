#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schreier::cli {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Environment variable naming the default fixture directory.
inline constexpr const char* kFixtureEnv = "SCHREIER_FIXTURES";

/// Runs the command line `args` (without the program name), writing payloads
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace schreier::cli
