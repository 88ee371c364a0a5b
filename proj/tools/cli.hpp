#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordal::cli {

/// Runs the chordal command line with `args` (without the program name).
/// Returns 0 when everything passed, 1 when a check failed and 2 for usage
/// or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordal::cli
