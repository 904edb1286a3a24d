#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace leavitt::cli {

//! Exit codes: 0 success or passing verdict, 1 failing verdict, 2 parse or
//! validation error.
enum ExitCode : int { kOk = 0, kVerdictFailed = 1, kBadInput = 2 };

//! Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leavitt::cli
