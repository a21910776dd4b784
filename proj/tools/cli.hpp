#pragma once

#include <string>
#include <vector>

namespace dirstock::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_invalid_input = 2;

int run(int argc, char** argv);
// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args);

} // namespace dirstock::cli
