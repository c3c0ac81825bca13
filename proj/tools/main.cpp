#include <iostream>

#include "cubic/cli.hpp"

int main(int argc, char** argv) {
  const auto result = cubic::cli::run({argv + 1, argv + argc});
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
