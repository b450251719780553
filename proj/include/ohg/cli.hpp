#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ohg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Full command-line front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" into numbers; throws std::invalid_argument.
std::vector<double> parse_lambda_grid(const std::string& text);

}  // namespace ohg
