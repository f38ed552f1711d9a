#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cactus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `cactus <args...>`. `in` backs --stdin; the result
// goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace cactus::cli
