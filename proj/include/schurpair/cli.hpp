#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "schurpair/error.hpp"

namespace schurpair::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kCapExceeded = 4,
};

int exit_code_for(ErrorKind kind);

/// Runs the command line (without the program name). Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurpair::cli
