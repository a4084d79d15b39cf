#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hv {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of run_cli.
enum ExitCode : int { kPassed = 0, kFailed = 1, kUsage = 2, kDomainNotCovered = 3 };

/// Runs one hvcheck command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hv
