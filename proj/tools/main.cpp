#include <iostream>

#include "weil/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return weil::cli::run(args, std::cout, std::cerr);
}
