#pragma once

#include <iosfwd>

namespace nquandle {

/// Process exit codes of the nquandle tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_exceeded = 2,
  exit_verification_failed = 3,
  exit_catalog_mismatch = 4,
};

/// Entry point of the command-line tool, with injectable streams for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace nquandle
