#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fbh::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

// Runs one command line (without the program name). Data goes to `out`,
// progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbh::cli
