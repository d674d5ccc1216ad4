#pragma once

// Command-line front end: normalize, decide, check and frame-dot.
//
// Exit codes: 0 success (or derivable / forced), 1 a negative verdict,
// 2 usage or parse errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace tsc::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsc::cli
