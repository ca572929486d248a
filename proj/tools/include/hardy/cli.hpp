#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardy::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2 };

/// Runs one subcommand. `args` excludes the program name. JSON input is read
/// from `in` unless --json-in is given; the report goes to `out` unless --out is.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
