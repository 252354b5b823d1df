#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvxgraph {

// Command-line driver behind the `cvxgraph` binary.  `args` excludes the
// program name.  Returns the process exit code: 0 success, 2 unusable input
// (flags, graph specs, config files), 3 exact-method size cap exceeded,
// 4 solver non-convergence (or, for trial harnesses, more than half the
// trials failing to converge).  All normal output goes to `out`, diagnostics
// and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvxgraph
