#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qforge::cli {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kInconclusive = 3,
};

// Runs one command line (without the program name). Human-readable text goes
// to `out`/`err`; documents are only ever written to files.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qforge::cli
