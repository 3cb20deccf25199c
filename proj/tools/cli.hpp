#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mstep::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 usage or input error, 2 counterexamples found.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mstep::cli
