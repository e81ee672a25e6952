#pragma once

#include "polynil/oracle.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polynil {

// Exit statuses of the command-line front end:
//   0  success / all verification checks passed
//   1  a verification sweep reported failures
//   2  usage error or group-expression parse error
//   3  resource-guard trip
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Prints one line per outcome (deterministically ordered) plus a summary and
// returns the verify exit status.
int print_outcomes(std::vector<CheckOutcome> outcomes, std::ostream& out);

}  // namespace polynil
