#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elimtree::cli {

/// Exit statuses shared by all subcommands.
enum ExitCode : int {
  exit_cyclic = 0,
  exit_error = 1,
  exit_acyclic = 3,
  exit_not_chordal = 4,
  exit_guard = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elimtree::cli
