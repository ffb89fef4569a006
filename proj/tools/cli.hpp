#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ellgen::cli {

// Exit codes of the ellgen tool.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNonExact = 3;

/// Runs one command line (without the program name). Tables go to `out`
/// only when the whole command succeeded; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellgen::cli
