#pragma once

#include <ostream>

#include "schroeter/error.hpp"

namespace schroeter {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,       // malformed input or failed validation
  kExitDegenerate = 2,  // degenerate or ambiguous configuration
  kExitInvariant = 3,   // a constructed object violates an invariant
};

int exit_code_for(ErrorKind kind);

// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schroeter
