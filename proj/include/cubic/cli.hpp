#pragma once

#include <string>
#include <vector>

namespace cubic::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariant = 3;

// Runs one command; `args` excludes the program name.
Result run(const std::vector<std::string>& args);

}  // namespace cubic::cli
