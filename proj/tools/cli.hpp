#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 malformed input.

#include <ostream>
#include <string>
#include <vector>

namespace orbitcat::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitMalformed = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitcat::cli
