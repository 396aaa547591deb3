#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ellrook::cli {

enum ExitCode { kPass = 0, kResidualFailure = 1, kInvalidInput = 2, kSingular = 3 };

// Runs one command line (without the program name). Results go to out,
// errors to err as {"error": ..., "kind": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellrook::cli
