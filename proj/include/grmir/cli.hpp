#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grmir {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit code: 0 for success, 1 for a failed check or cache
// mismatch, 2 for usage errors and exceeded budgets.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace grmir
