#include <iostream>
#include <string>
#include <vector>

#include "confspace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return confspace::run_cli(args, std::cout, std::cerr);
}
