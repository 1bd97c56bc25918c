#include <iostream>
#include <string>
#include <vector>

#include "silence/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return silence::cli::run(args, std::cout, std::cerr);
}
