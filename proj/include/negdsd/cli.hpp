#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace negdsd::cli {

/// Entry point of the `negdsd` tool. `args` excludes the program name.
/// Returns 0 on success, 1 when a solver precondition fails and 2 on argument
/// or input format errors. The report is written to `out` in one piece.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace negdsd::cli
