#include <iostream>
#include <string>
#include <vector>

#include "drharm_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drharm::cli::run(args, std::cout, std::cerr);
}
