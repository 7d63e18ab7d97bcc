#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zf::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name).  Reports go to
/// `out`, diagnostics to `err`; files are written under --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zf::cli
