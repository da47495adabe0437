#include <iostream>
#include <string>
#include <vector>

#include "radii/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return radii::run_cli(args, std::cout, std::cerr);
}
