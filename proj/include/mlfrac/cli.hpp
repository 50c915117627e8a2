#pragma once

#include <ostream>
#include <span>
#include <string>

namespace mlfrac::cli {

/// Runs one command line (program name excluded). Returns the process exit code:
/// 0 success, 1 failed checks or a truncated evaluation, 2 usage or domain error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mlfrac::cli
