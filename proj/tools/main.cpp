#include <iostream>
#include <string>
#include <vector>

#include "romanff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return romanff::cli::run(args, std::cout, std::cerr);
}
