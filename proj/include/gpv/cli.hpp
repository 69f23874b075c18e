#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpv::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_law_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_disconnected = 3;
inline constexpr int exit_size = 4;

/// Runs one command line; args excludes the program name. "-" as an input
/// path reads from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace gpv::cli
