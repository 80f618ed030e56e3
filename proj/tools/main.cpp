#include <iostream>
#include <string>
#include <vector>

#include "landauer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return landauer::run_cli(args, std::cout, std::cerr);
}
