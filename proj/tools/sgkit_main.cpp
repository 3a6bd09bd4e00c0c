#include <iostream>
#include <string>
#include <vector>

#include "sgkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgkit::run_cli(args, std::cout, std::cerr);
}
