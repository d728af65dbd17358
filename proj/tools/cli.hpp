#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transdim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // a check ran and found a violation
inline constexpr int kUsageError = 2;   // parse, validation, flag or file errors
inline constexpr int kInternalError = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transdim::cli
