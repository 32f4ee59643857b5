#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setmatch::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // counterexample or rejected matching
inline constexpr int kUsage = 2;   // bad flags, unreadable or malformed input

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setmatch::cli
