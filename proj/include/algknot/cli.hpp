#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algknot::cli {

/// Runs the CLI on the given arguments (without argv[0]). Output goes to
/// `out`, diagnostics to `err`. Exit codes: 0 success, 1 usage error,
/// 2 invalid knot input, 3 internal assertion failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algknot::cli
