#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indel::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a verify suite failed
inline constexpr int kExitUsage = 2;        // bad arguments or invalid parameters
inline constexpr int kExitInapplicable = 3; // an explicitly requested method does not apply
inline constexpr int kExitGuard = 4;        // enumeration guard exceeded

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indel::cli
