#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ccperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_max_n;
  if (const char* v = std::getenv(ccperm::cli::kMaxNEnv)) env_max_n = v;
  return ccperm::cli::run(args, std::cin, std::cout, std::cerr, env_max_n);
}
