#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgemap::cli {

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err. Returns the process exit code: 0 on success,
/// 1 for malformed input, 2 for a failed mathematical precondition.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wedgemap::cli
