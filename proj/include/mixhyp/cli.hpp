#ifndef MIXHYP_CLI_HPP
#define MIXHYP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mixhyp {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mixhyp

#endif // MIXHYP_CLI_HPP
