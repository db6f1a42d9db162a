#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cw {

/// Runs the command-line tool. args excludes the program name. Reports go to
/// out; errors go to err as {"error": kind, "message": text} with a nonzero
/// return value.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cw
