#ifndef DIGSPEC_TOOLS_CLI_HPP
#define DIGSPEC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace digspec::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (args excludes the program name). Output goes to
/// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digspec::cli

#endif  // DIGSPEC_TOOLS_CLI_HPP
