#include <iostream>
#include <string>
#include <vector>

#include "om/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return om::run_cli(args, std::cout, std::cerr);
}
