#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ratcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Refuse enumerations projected above this many objects unless --force.
inline constexpr unsigned long long kEnumerationLimit = 10'000'000ULL;

/// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratcat::cli
