#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modr::cli {

/// Exit codes.
constexpr int kPassed = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace modr::cli
