#include <iostream>
#include <string>
#include <vector>

#include "swan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return swan::run_cli(args, std::cin, std::cout);
}
