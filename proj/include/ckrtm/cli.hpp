#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ckrtm::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceLimit = 3 };

/// Runs one command line (without the program name). Output is written to
/// `out` and diagnostics to `err`; the return value is the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ckrtm::cli
