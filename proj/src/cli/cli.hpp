#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fockwit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitSelftestFailed = 1,
  kExitBadSpec = 2,
  kExitLeakage = 3,
  kExitOracleCap = 4,
};

/// Environment variable naming the default output directory when --output
/// is not given. Without either, results go to `out`.
inline constexpr const char* kOutputDirEnv = "FOCKWIT_OUTPUT_DIR";

/// Runs one command line (without the program name). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockwit::cli
