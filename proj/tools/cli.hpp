#ifndef MCS_TOOLS_CLI_HPP
#define MCS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mcs::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kInputError = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mcs::cli

#endif
