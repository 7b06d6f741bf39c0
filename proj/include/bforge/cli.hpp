#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bforge {

// Runs the command-line driver. Arguments exclude the program name. Output
// destined for scripts goes to `out`; diagnostics go to `err`. Returns the
// process exit status: 0 success, 1 verification failure, 2 parse error,
// 3 budget exhausted.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int cli_run(int argc, const char* const* argv);

}  // namespace bforge
